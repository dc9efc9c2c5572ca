#include <doctest.h>

#include <algorithm>

#include "hkmult/families.hpp"
#include "hkmult/invariants.hpp"
#include "hkmult/reptype.hpp"
#include "support.hpp"

using namespace hkm;
using testing_support::errorOf;

namespace {

StableCMType unit(long r, long m) {
    StableCMType u{std::vector<BigInt>(static_cast<size_t>(r - 1), 0)};
    u.u[static_cast<size_t>(m - 1)] = 1;
    return u;
}

} // namespace

TEST_SUITE("rep-type") {

TEST_CASE("egHKFromType examples") {
    CHECK(egHKFromType({{0, 0}}, {{Rat(1, 3), Rat(1, 3)}}, aTorTable(3)) == 0);
    CHECK(egHKFromType({{1, 0}}, {{Rat(1, 3), Rat(1, 3)}}, aTorTable(3)) == Rat(2, 3));
    CHECK(egHKFromType({{0, 1, 0}}, {{Rat(1, 4), Rat(1, 4), Rat(1, 4)}}, aTorTable(4)) == 1);
}

TEST_CASE("aTorTable entries") {
    CHECK(aTorTable(5).entry(2, 3) == 2);
    CHECK(aTorTable(5).entry(1, 4) == 1);
    CHECK(aTorTable(2).dimension() == 1);
    CHECK(aTorTable(2).entry(1, 1) == 1);
    CHECK(errorOf([] { aTorTable(1); }) == Errc::BadParameters);
}

TEST_CASE("egHK_A examples") {
    CHECK(egHK_A(3, {{1, 0}}) == Rat(2, 3));
    CHECK(egHK_A(4, {{1, 1, 1}}) == Rat(5, 2));
    for (long r = 2; r <= 9; ++r) CHECK(egHK_A(r, {std::vector<BigInt>(static_cast<size_t>(r - 1), 0)}) == 0);
    CHECK(errorOf([] { egHK_A(4, {{1, 1}}); }) == Errc::DimensionMismatch);
}

TEST_CASE("aTorTable symmetry and reflection") {
    for (long r = 2; r <= 30; ++r) {
        TorTable t = aTorTable(r);
        REQUIRE(t.dimension() == static_cast<size_t>(r - 1));
        for (long i = 1; i < r; ++i)
            for (long j = 1; j < r; ++j) {
                auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
                CHECK(t.entry(ui, uj) == std::min({i, j, r - i, r - j}));
                CHECK(t.entry(ui, uj) == t.entry(uj, ui));
                CHECK(t.entry(ui, uj) == t.entry(static_cast<size_t>(r - i), static_cast<size_t>(r - j)));
            }
    }
}

TEST_CASE("row sums of the A table") {
    for (long r = 2; r <= 50; ++r) {
        TorTable t = aTorTable(r);
        for (long m = 1; m < r; ++m) {
            BigInt sum = 0;
            for (size_t j = 1; j <= t.dimension(); ++j) sum += t.entry(static_cast<size_t>(m), j);
            CHECK(sum == m * (r - m));
            CHECK(egHK_A(r, unit(r, m)) == Rat(m * (r - m), r));
        }
    }
}

TEST_CASE("representation-type and toric values agree") {
    for (long r = 2; r <= 10; ++r)
        for (long m = 1; m < r; ++m) CHECK(egHK_A(r, unit(r, m)) == egHK(aSingularity(r, m).ideal));
}

TEST_CASE("egHKFromType is linear in u and v") {
    std::mt19937 rng(307);
    std::uniform_int_distribution<int> d(0, 9);
    for (int trial = 0; trial < 50; ++trial) {
        long r = 2 + trial % 8;
        auto n = static_cast<size_t>(r - 1);
        TorTable t = aTorTable(r);
        StableCMType u1, u2, sum;
        SplittingVector v1, v2, vsum;
        for (size_t i = 0; i < n; ++i) {
            u1.u.push_back(d(rng));
            u2.u.push_back(d(rng));
            sum.u.push_back(u1.u[i] + u2.u[i]);
            v1.v.push_back(Rat(d(rng), d(rng) + 1));
            v2.v.push_back(Rat(d(rng), d(rng) + 1));
            vsum.v.push_back(v1.v[i] + v2.v[i]);
        }
        CHECK(egHKFromType(sum, v1, t) == egHKFromType(u1, v1, t) + egHKFromType(u2, v1, t));
        CHECK(egHKFromType(u1, vsum, t) == egHKFromType(u1, v1, t) + egHKFromType(u1, v2, t));
    }
}

TEST_CASE("user tables") {
    TorTable t = TorTable::fromRows({{2, 1}, {1, 3}});
    CHECK(t.dimension() == 2);
    CHECK(t.entry(1, 2) == 1);
    CHECK(egHKFromType({{1, 1}}, {{Rat(1, 2), Rat(1, 3)}}, t) == Rat(1, 2) * 3 + Rat(1, 3) * 4);

    CHECK(errorOf([] { TorTable::fromRows({}); }) == Errc::EmptyInput);
    CHECK(errorOf([] { TorTable::fromRows({{1, 2}, {3}}); }) == Errc::DimensionMismatch);
    CHECK(errorOf([] { TorTable::fromRows({{1, 2}, {3, 4}}); }) == Errc::AsymmetricTable);
    CHECK(errorOf([] { TorTable::fromRows({{-1}}); }) == Errc::BadParameters);
    CHECK(errorOf([&] { egHKFromType({{1}}, {{1, 1}}, t); }) == Errc::DimensionMismatch);
    CHECK(errorOf([&] { egHKFromType({{1, 1}}, {{1}}, t); }) == Errc::DimensionMismatch);
}

} // TEST_SUITE
