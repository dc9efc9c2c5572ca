#include "hkmult/reptype.hpp"

#include <algorithm>
#include <string>

#include "hkmult/error.hpp"

namespace hkm {

TorTable TorTable::fromRows(const std::vector<std::vector<BigInt>>& rows) {
    if (rows.empty())
        throw Error(Errc::EmptyInput, "Tor table has no rows");
    TorTable table;
    table.n_ = rows.size();
    table.entries_.reserve(table.n_ * table.n_);
    for (const auto& row : rows) {
        if (row.size() != table.n_)
            throw Error(Errc::DimensionMismatch, "Tor table is not square");
        for (const BigInt& x : row) {
            if (x < 0)
                throw Error(Errc::BadParameters, "Tor lengths must be nonnegative");
            table.entries_.push_back(x);
        }
    }
    for (size_t i = 1; i <= table.n_; ++i)
        for (size_t j = i + 1; j <= table.n_; ++j)
            if (table.entry(i, j) != table.entry(j, i))
                throw Error(Errc::AsymmetricTable, "entry(" + std::to_string(i) + "," + std::to_string(j) +
                                                       ") differs from its transpose");
    return table;
}

Rat egHKFromType(const StableCMType& u, const SplittingVector& v, const TorTable& table) {
    const size_t n = table.dimension();
    if (u.u.size() != n || v.v.size() != n)
        throw Error(Errc::DimensionMismatch, "u has length " + std::to_string(u.u.size()) + ", v has length " +
                                                 std::to_string(v.v.size()) + ", table has dimension " +
                                                 std::to_string(n));
    Rat total = 0;
    for (size_t i = 1; i <= n; ++i) {
        if (u.u[i - 1] == 0)
            continue;
        Rat row = 0;
        for (size_t j = 1; j <= n; ++j) row += v.v[j - 1] * Rat(table.entry(i, j));
        total += Rat(u.u[i - 1]) * row;
    }
    return total;
}

TorTable aTorTable(long r) {
    if (r < 2)
        throw Error(Errc::BadParameters, "A_{r-1} needs r >= 2");
    std::vector<std::vector<BigInt>> rows(static_cast<size_t>(r - 1));
    for (long i = 1; i < r; ++i)
        for (long j = 1; j < r; ++j) rows[static_cast<size_t>(i - 1)].push_back(std::min({i, j, r - i, r - j}));
    return TorTable::fromRows(rows);
}

Rat egHK_A(long r, const StableCMType& u) {
    TorTable table = aTorTable(r);
    SplittingVector v{std::vector<Rat>(table.dimension(), Rat(1, r))};
    return egHKFromType(u, v, table);
}

} // namespace hkm
