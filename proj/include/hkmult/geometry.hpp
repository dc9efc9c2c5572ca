#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "hkmult/rational.hpp"

namespace hkm {

struct LatticePoint {
    BigInt x1;
    BigInt x2;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) {
        if (a.x1 != b.x1) return a.x1 < b.x1 ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.x2 != b.x2) return a.x2 < b.x2 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        return {a.x1 + b.x1, a.x2 + b.x2};
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        return {a.x1 - b.x1, a.x2 - b.x2};
    }
    friend LatticePoint operator*(const BigInt& k, const LatticePoint& a) { return {k * a.x1, k * a.x2}; }
};

inline BigInt dot(const LatticePoint& a, const LatticePoint& b) { return a.x1 * b.x1 + a.x2 * b.x2; }

// Facet ("corner") coordinates of a point: (<normal1, p>, <normal2, p>).
struct Corner {
    BigInt s;
    BigInt t;

    friend bool operator==(const Corner&, const Corner&) = default;

    // Componentwise >=: this point lies in w + sigma.
    bool dominates(const Corner& w) const { return s >= w.s && t >= w.t; }
    friend Corner operator*(const BigInt& k, const Corner& c) { return {k * c.s, k * c.t}; }
    friend Corner operator+(const Corner& a, const Corner& b) { return {a.s + b.s, a.t + b.t}; }
    friend Corner operator-(const Corner& a, const Corner& b) { return {a.s - b.s, a.t - b.t}; }
};

/// A strongly convex rational cone in the plane.
///
/// normal1 vanishes on ray1 and normal2 on ray2; both normals are primitive
/// and point into the cone. The corner map p -> (<normal1,p>, <normal2,p>)
/// sends the cone onto the closed first quadrant and M = Z^2 onto a
/// sublattice of index detAbs(). Because normal1 is primitive every integer
/// s is attained, and the lattice points above a fixed s form a single
/// residue class of t modulo detAbs().
class Cone2 {
public:
    const LatticePoint& ray1() const { return ray1_; }
    const LatticePoint& ray2() const { return ray2_; }
    const LatticePoint& normal1() const { return normal1_; }
    const LatticePoint& normal2() const { return normal2_; }
    const BigInt& detAbs() const { return detAbs_; }

    Corner corner(const LatticePoint& p) const { return {dot(normal1_, p), dot(normal2_, p)}; }
    bool contains(const LatticePoint& p) const { return dot(normal1_, p) >= 0 && dot(normal2_, p) >= 0; }

    // The residue t0 in [0, detAbs) such that (s, t) is the corner of a lattice
    // point iff t = t0 (mod detAbs).
    BigInt tResidue(const BigInt& s) const;

    bool isLatticeCorner(const Corner& c) const;

    // Inverse of the corner map on lattice corners.
    std::optional<LatticePoint> preimage(const Corner& c) const;

    // Exact inverse of the corner map over Q (used for drawing).
    std::pair<Rat, Rat> realPreimage(const Rat& s, const Rat& t) const;

    friend bool operator==(const Cone2&, const Cone2&) = default;

private:
    friend Cone2 makeCone(LatticePoint, LatticePoint);

    LatticePoint ray1_, ray2_, normal1_, normal2_;
    BigInt detAbs_;
    LatticePoint unitSection_; // <normal1, unitSection_> == 1
    BigInt tPerS_;             // <normal2, unitSection_> mod detAbs
};

/// Reduces rays to primitive vectors and computes inward primitive normals.
/// Throws Errc::CollinearRays when det(ray1, ray2) == 0 (including a zero ray).
Cone2 makeCone(LatticePoint ray1, LatticePoint ray2);

inline Corner cornerCoords(const Cone2& cone, const LatticePoint& p) { return cone.corner(p); }

/// Pareto-minimal corners, strictly increasing in s and strictly decreasing in t.
class Staircase {
public:
    Staircase() = default;
    explicit Staircase(Corner single) : corners_{std::move(single)} {}

    std::span<const Corner> corners() const { return corners_; }
    size_t size() const { return corners_.size(); }
    bool empty() const { return corners_.empty(); }
    const Corner& front() const { return corners_.front(); }
    const Corner& back() const { return corners_.back(); }

    // True iff c dominates some corner, i.e. c lies in the represented region.
    bool covers(const Corner& c) const;

    // Least t among corners with s-coordinate <= s; nullopt if there is none.
    std::optional<BigInt> floorT(const BigInt& s) const;

    Staircase scaled(const BigInt& k) const;
    Staircase shifted(const Corner& offset) const;

    friend bool operator==(const Staircase&, const Staircase&) = default;

private:
    friend Staircase paretoMinimal(std::vector<Corner>);
    std::vector<Corner> corners_;
};

/// Throws Errc::EmptyInput for an empty list.
Staircase paretoMinimal(std::vector<Corner> corners);

/// Euclidean area (in x-space) of {corner >= threshold} minus the staircase region.
/// The staircase must touch both threshold lines (min s == threshold.s and
/// min t == threshold.t), otherwise Errc::UnboundedRegion.
Rat staircaseComplementArea(const Cone2& cone, const Corner& threshold, const Staircase& stair);

/// Number of lattice points with corner >= threshold that the staircase does not cover.
BigInt countLatticeComplement(const Cone2& cone, const Corner& threshold, const Staircase& stair);

/// Half-open corner-space box [s0, s1) x [t0, t1).
struct CornerBox {
    BigInt s0, s1;
    BigInt t0, t1;
};

/// Decomposes W(outer) minus W(inner) into maximal s-columns of constant height,
/// ordered by s. Requires W(inner) to be contained in W(outer) (Errc::NotNested)
/// and the difference to be bounded (Errc::UnboundedRegion).
std::vector<CornerBox> differenceBoxes(const Staircase& outer, const Staircase& inner);

/// Lattice points covered by `outer` but not by `inner`. Requires W(inner) to be
/// contained in W(outer) (Errc::NotNested) and the difference to be bounded
/// (Errc::UnboundedRegion).
BigInt countLatticeBetween(const Cone2& cone, const Staircase& outer, const Staircase& inner);

/// Area of W(outer) minus W(inner), same preconditions as countLatticeBetween.
Rat areaBetween(const Cone2& cone, const Staircase& outer, const Staircase& inner);

/// Perimeter of the corner-space box [threshold.s, back().s] x [threshold.t, front().t]
/// that contains the complement; used for the counting error bound.
BigInt boundingPerimeter(const Corner& threshold, const Staircase& stair);

} // namespace hkm
