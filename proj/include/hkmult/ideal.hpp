#pragma once

#include <optional>
#include <vector>

#include "hkmult/geometry.hpp"

namespace hkm {

/// Minimal facet values (c1, c2) over the generators. In dimension two the
/// saturation I : m^inf consists of the lattice points whose corner
/// coordinates are >= (c1, c2); symbolic powers I^(n) are (n*c1, n*c2).
struct Thresholds {
    BigInt c1;
    BigInt c2;

    Corner asCorner() const { return {c1, c2}; }
    Thresholds scaled(const BigInt& k) const { return {k * c1, k * c2}; }
    friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

/// A monomial ideal of k[sigma ∩ M], stored by its minimal generators.
///
/// generators()[i] is the unique lattice point with corner staircase().corners()[i].
/// Membership of x^p is dominance of cornerCoords(p) over some staircase corner;
/// this relies on the semigroup being normal.
class MonomialIdeal {
public:
    /// Validates containment in the cone, removes duplicates and non-minimal
    /// generators. Errors: EmptyInput, GeneratorOutsideCone.
    MonomialIdeal(Cone2 cone, std::vector<LatticePoint> gens);

    const Cone2& cone() const { return cone_; }
    const std::vector<LatticePoint>& generators() const { return gens_; }
    const Staircase& staircase() const { return stair_; }

    bool contains(const LatticePoint& p) const { return stair_.covers(cone_.corner(p)); }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    Cone2 cone_;
    std::vector<LatticePoint> gens_;
    Staircase stair_;
};

MonomialIdeal frobeniusPower(const MonomialIdeal& ideal, const BigInt& q);

/// Generated by all n-fold sums of generators, Pareto-reduced.
/// Computed as iterated products, each followed by reduction, so the cost is
/// O(n * |stair| * |gens|) instead of the C(n+s-1, s-1) multisets.
MonomialIdeal ordinaryPower(const MonomialIdeal& ideal, unsigned n);

/// Product of two ideals over the same cone.
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);

Thresholds lcThresholds(const MonomialIdeal& ideal);

/// I : m^inf, i.e. the lattice points with corners >= lcThresholds(I).
MonomialIdeal saturation(const MonomialIdeal& ideal);

/// True when I has no m-torsion in R/I (equivalently, for height-one ideals
/// here, I is reflexive).
bool isSaturated(const MonomialIdeal& ideal);

/// The saturation is principal iff the threshold corner is itself a lattice corner.
bool saturationIsPrincipal(const MonomialIdeal& ideal);

struct TorsionFactorization {
    unsigned order;
    LatticePoint principalPart;
    MonomialIdeal cofactor; // m-primary; gens(I^order) == principalPart + gens(cofactor)
};

/// Smallest r <= maxOrder with r*(c1, c2) a lattice corner, so that
/// I^r = x^u * J with J m-primary. Returns nullopt when no such r exists
/// (the class of I is not torsion of order <= maxOrder).
/// Throws Errc::NotSaturated for non-saturated input.
std::optional<TorsionFactorization> torsionFactorization(const MonomialIdeal& ideal, unsigned maxOrder);

} // namespace hkm
