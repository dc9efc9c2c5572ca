#include <doctest.h>

#include "hkmult/error.hpp"
#include "hkmult/geometry.hpp"
#include "support.hpp"

using namespace hkm;

namespace {

using testing_support::errorOf;

Staircase stairOf(std::vector<Corner> corners) { return paretoMinimal(std::move(corners)); }

const Cone2 kQuadrant = makeCone({1, 0}, {0, 1});
const Cone2 kVeronese3 = makeCone({1, 0}, {1, 3});
const Cone2 kA3 = makeCone({0, 1}, {3, -1});

} // namespace

TEST_SUITE("geometry-core") {

TEST_CASE("makeCone normals and determinant") {
    CHECK(kQuadrant.normal1() == LatticePoint{0, 1});
    CHECK(kQuadrant.normal2() == LatticePoint{1, 0});
    CHECK(kQuadrant.detAbs() == 1);

    CHECK(kVeronese3.normal1() == LatticePoint{0, 1});
    CHECK(kVeronese3.normal2() == LatticePoint{3, -1});
    CHECK(kVeronese3.detAbs() == 3);

    CHECK(kA3.normal1() == LatticePoint{1, 0});
    CHECK(kA3.normal2() == LatticePoint{1, 3});

    CHECK(errorOf([] { makeCone({1, 2}, {2, 4}); }) == Errc::CollinearRays);
    CHECK(errorOf([] { makeCone({0, 0}, {2, 4}); }) == Errc::CollinearRays);
}

TEST_CASE("makeCone reduces rays to primitive vectors") {
    Cone2 c = makeCone({2, 0}, {3, 9});
    CHECK(c.ray1() == LatticePoint{1, 0});
    CHECK(c.ray2() == LatticePoint{1, 3});
    CHECK(c == kVeronese3);
}

TEST_CASE("cornerCoords") {
    CHECK(cornerCoords(kQuadrant, {2, 3}) == Corner{3, 2});
    CHECK(cornerCoords(kVeronese3, {2, 1}) == Corner{1, 5});
    CHECK(cornerCoords(kA3, {3, -1}) == Corner{3, 0});
}

TEST_CASE("corner map is injective and preimage inverts it") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Cone2 cone = testing_support::randomCone(rng, 6);
        CHECK(dot(cone.normal1(), cone.ray1()) == 0);
        CHECK(dot(cone.normal2(), cone.ray2()) == 0);
        CHECK(dot(cone.normal1(), cone.ray2()) > 0);
        CHECK(dot(cone.normal2(), cone.ray1()) > 0);
        CHECK(dot(cone.normal2(), cone.ray1()) == cone.detAbs());
        for (int x = -5; x <= 5; ++x)
            for (int y = -5; y <= 5; ++y) {
                LatticePoint p{x, y};
                Corner c = cone.corner(p);
                REQUIRE(cone.isLatticeCorner(c));
                CHECK(*cone.preimage(c) == p);
                CHECK(cone.contains(p) == (c.s >= 0 && c.t >= 0));
                // Off-lattice neighbours in the same column.
                if (cone.detAbs() > 1)
                    CHECK_FALSE(cone.isLatticeCorner({c.s, c.t + 1}));
            }
    }
}

TEST_CASE("area scaling between x-space and corner space") {
    // A corner-space box of area A maps to a parallelogram of area A / detAbs.
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Cone2 cone = testing_support::randomCone(rng, 5);
        std::vector<std::pair<double, double>> poly;
        for (auto [s, t] : {std::pair{0, 0}, {4, 0}, {4, 7}, {0, 7}}) {
            auto [x, y] = cone.realPreimage(Rat(s), Rat(t));
            poly.emplace_back(x.convert_to<double>(), y.convert_to<double>());
        }
        double area = std::abs(oracle::shoelace2(poly)) / 2;
        CHECK(area == doctest::Approx(28.0 / cone.detAbs().convert_to<double>()));
    }
}

TEST_CASE("paretoMinimal") {
    CHECK(stairOf({{0, 3}, {1, 2}, {2, 2}}).size() == 2);
    CHECK(stairOf({{0, 3}, {1, 2}, {2, 2}}).back() == Corner{1, 2});
    CHECK(stairOf({{5, 5}}).size() == 1);
    Staircase chain = stairOf({{3, 6}, {0, 9}, {2, 7}, {1, 8}});
    REQUIRE(chain.size() == 4);
    CHECK(chain.front() == Corner{0, 9});
    CHECK(chain.back() == Corner{3, 6});
    CHECK(errorOf([] { paretoMinimal({}); }) == Errc::EmptyInput);
}

TEST_CASE("paretoMinimal preserves the dominance predicate") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 12);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Corner> raw(static_cast<size_t>(1 + trial % 9));
        for (auto& c : raw) c = {d(rng), d(rng)};
        Staircase st = paretoMinimal(raw);
        auto cs = st.corners();
        for (size_t i = 0; i + 1 < cs.size(); ++i) {
            CHECK(cs[i].s < cs[i + 1].s);
            CHECK(cs[i].t > cs[i + 1].t);
        }
        for (int s = -1; s <= 14; ++s)
            for (int t = -1; t <= 14; ++t) {
                Corner probe{s, t};
                bool before = std::any_of(raw.begin(), raw.end(), [&](const Corner& w) { return probe.dominates(w); });
                CHECK(st.covers(probe) == before);
            }
    }
}

TEST_CASE("staircaseComplementArea") {
    CHECK(staircaseComplementArea(kQuadrant, {0, 0}, stairOf({{2, 0}, {0, 3}})) == 6);
    CHECK(staircaseComplementArea(kVeronese3, {0, 2}, stairOf({{0, 3}, {1, 2}})) == Rat(1, 3));
    CHECK(staircaseComplementArea(kVeronese3, {4, 2}, Staircase(Corner{4, 2})) == 0);
    CHECK(staircaseComplementArea(kA3, {1, 0}, Staircase(Corner{1, 0})) == 0);
    CHECK(staircaseComplementArea(kA3, {0, 0}, stairOf({{1, 0}, {0, 5}})) == Rat(5, 3));

    CHECK(errorOf([] { staircaseComplementArea(kQuadrant, {0, 0}, stairOf({{2, 1}, {0, 3}})); }) ==
          Errc::UnboundedRegion);
    CHECK(errorOf([] { staircaseComplementArea(kQuadrant, {1, 0}, stairOf({{2, 0}, {0, 3}})); }) ==
          Errc::UnboundedRegion);
}

TEST_CASE("area is invariant under appending dominated corners") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(0, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Corner> raw{{0, d(rng) + 1}, {d(rng) + 1, 0}, {d(rng), d(rng)}};
        Staircase st = paretoMinimal(raw);
        Rat base = staircaseComplementArea(kVeronese3, {0, 0}, st);
        raw.push_back(raw[2] + Corner{d(rng), d(rng)});
        raw.push_back(raw[0] + Corner{1, 0});
        CHECK(staircaseComplementArea(kVeronese3, {0, 0}, paretoMinimal(raw)) == base);
    }
}

TEST_CASE("countLatticeComplement") {
    CHECK(countLatticeComplement(kQuadrant, {0, 0}, stairOf({{2, 0}, {0, 3}})) == 6);
    // Frobenius data of I_1 in the 3-Veronese at q = 2 and q = 4.
    CHECK(countLatticeComplement(kVeronese3, {0, 4}, stairOf({{0, 6}, {2, 4}})) == 1);
    CHECK(countLatticeComplement(kVeronese3, {0, 8}, stairOf({{0, 12}, {4, 8}})) == 5);
    CHECK(countLatticeComplement(kVeronese3, {3, 3}, Staircase(Corner{3, 3})) == 0);
    CHECK(errorOf([] { countLatticeComplement(kQuadrant, {0, 0}, stairOf({{2, 1}, {0, 3}})); }) ==
          Errc::UnboundedRegion);
}

TEST_CASE("the single gap point at q = 2 is (2,1)") {
    CHECK(kVeronese3.corner({2, 1}) == Corner{1, 5});
    CHECK(*kVeronese3.preimage({1, 5}) == LatticePoint{2, 1});
}

TEST_CASE("countLatticeBetween rejects non-nested staircases") {
    CHECK(errorOf([] { countLatticeBetween(kQuadrant, stairOf({{1, 1}}), stairOf({{0, 3}, {3, 1}})); }) ==
          Errc::NotNested);
}

TEST_CASE("row counting agrees with an x-space scan on random staircases") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        auto ideal = testing_support::randomIdeal(rng, 4, 8, 4);
        const auto& st = ideal.staircase();
        Corner thr{st.front().s, st.back().t};
        auto cone = testing_support::toOracle(ideal.cone());
        auto gens = testing_support::toOracle(ideal.generators());
        long long expected = oracle::gapCount(cone, gens, testing_support::gapRadius(ideal, 1));
        CHECK(countLatticeComplement(ideal.cone(), thr, st) == expected);
    }
}

TEST_CASE("count/q^2 converges to the area with error at most C/q") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        auto ideal = testing_support::randomIdeal(rng, 4, 6, 4);
        const auto& st = ideal.staircase();
        Corner thr{st.front().s, st.back().t};
        Rat area = staircaseComplementArea(ideal.cone(), thr, st);
        BigInt c = 4 * boundingPerimeter(thr, st);
        for (int q : {8, 16, 32, 64}) {
            BigInt count = countLatticeComplement(ideal.cone(), BigInt(q) * thr, st.scaled(q));
            Rat err = abs(Rat(count, q * q) - area);
            CHECK(err <= Rat(c, q));
        }
    }
}

TEST_CASE("counting is exact for large coordinates") {
    // 2^70 shifts: the count only depends on the shape, not on the offset.
    BigInt big = BigInt(1) << 70;
    Staircase st = stairOf({{0, 6}, {2, 4}});
    Corner shift{3 * big, 3 * big};
    CHECK(countLatticeComplement(kVeronese3, Corner{0, 4} + shift, st.shifted(shift)) == 1);
    CHECK(staircaseComplementArea(kVeronese3, Corner{0, 4} + shift, st.shifted(shift)) == Rat(4, 3));
}

} // TEST_SUITE
