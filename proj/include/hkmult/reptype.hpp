#pragma once

#include <vector>

#include "hkmult/rational.hpp"

namespace hkm {

/// Multiplicities u_i of the indecomposable non-free MCM modules X_i in the
/// MCM approximation of M.
struct StableCMType {
    std::vector<BigInt> u;
};

/// Asymptotic share v_j of X_j in the Frobenius pushforward of R.
struct SplittingVector {
    std::vector<Rat> v;
};

/// Symmetric table of lengths l(Tor_1(X_i, X_j)), indexed from 1.
class TorTable {
public:
    /// Errors: EmptyInput, DimensionMismatch (ragged), AsymmetricTable,
    /// BadParameters (negative entry).
    static TorTable fromRows(const std::vector<std::vector<BigInt>>& rows);

    size_t dimension() const { return n_; }
    const BigInt& entry(size_t i, size_t j) const { return entries_[(i - 1) * n_ + (j - 1)]; }

private:
    size_t n_ = 0;
    std::vector<BigInt> entries_;
};

/// sum_{i,j} u_i v_j T(i,j), valid for modules of positive depth.
Rat egHKFromType(const StableCMType& u, const SplittingVector& v, const TorTable& table);

/// A_{r-1}: entry(i,j) = min{i, j, r-i, r-j}, dimension r-1.
TorTable aTorTable(long r);

/// egHKFromType with v_j = 1/r and the A_{r-1} table.
Rat egHK_A(long r, const StableCMType& u);

} // namespace hkm
