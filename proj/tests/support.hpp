#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hkmult/error.hpp"
#include "hkmult/families.hpp"
#include "oracle.hpp"

namespace testing_support {

using hkm::BigInt;
using hkm::LatticePoint;

// Code of the hkm::Error thrown by fn, or nullopt if it returns normally.
template <class F>
std::optional<hkm::Errc> errorOf(F&& fn) {
    try {
        fn();
    } catch (const hkm::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

inline oracle::P toP(const LatticePoint& p) { return {p.x1.convert_to<long long>(), p.x2.convert_to<long long>()}; }
inline LatticePoint fromP(const oracle::P& p) { return {p.x, p.y}; }

inline oracle::Cone toOracle(const hkm::Cone2& c) { return {toP(c.ray1()), toP(c.ray2())}; }

inline oracle::Gens toOracle(const std::vector<LatticePoint>& gens) {
    oracle::Gens out;
    for (const auto& g : gens) out.push_back(toP(g));
    return out;
}

// Random strongly convex cone with ray entries in [-range, range].
inline hkm::Cone2 randomCone(std::mt19937& rng, int range) {
    std::uniform_int_distribution<int> d(-range, range);
    while (true) {
        LatticePoint a{d(rng), d(rng)}, b{d(rng), d(rng)};
        if (a.x1 * b.x2 - a.x2 * b.x1 != 0)
            return hkm::makeCone(a, b);
    }
}

// 1..maxGens random generators inside the cone, entries in [-range, range].
inline std::vector<LatticePoint> randomGens(std::mt19937& rng, const hkm::Cone2& cone, int range, int maxGens) {
    std::uniform_int_distribution<int> d(-range, range);
    std::uniform_int_distribution<int> count(1, maxGens);
    int want = count(rng);
    std::vector<LatticePoint> gens;
    while (static_cast<int>(gens.size()) < want) {
        LatticePoint p{d(rng), d(rng)};
        if (cone.contains(p))
            gens.push_back(p);
    }
    return gens;
}

inline hkm::MonomialIdeal randomIdeal(std::mt19937& rng, int coneRange, int genRange, int maxGens) {
    hkm::Cone2 cone = randomCone(rng, coneRange);
    return hkm::MonomialIdeal(cone, randomGens(rng, cone, genRange, maxGens));
}

// Box radius in x-space that contains the gap region of `ideal` scaled by k:
// the preimage of the corner box [c1, s_last] x [c2, t_first] is a parallelogram.
inline long long gapRadius(const hkm::MonomialIdeal& ideal, long long k) {
    const auto& st = ideal.staircase();
    const auto& cone = ideal.cone();
    long long m = 1;
    for (const BigInt* s : {&st.front().s, &st.back().s})
        for (const BigInt* t : {&st.front().t, &st.back().t}) {
            auto [x, y] = cone.realPreimage(hkm::Rat(*s), hkm::Rat(*t));
            for (const hkm::Rat& v : {x, y}) {
                BigInt c = hkm::ceilDiv(abs(hkm::numer(v)), hkm::denom(v));
                m = std::max(m, c.convert_to<long long>());
            }
        }
    return k * m + 2;
}

} // namespace testing_support
