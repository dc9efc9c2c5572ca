#include "hkmult/geometry.hpp"

#include <algorithm>
#include <set>

#include "hkmult/error.hpp"

namespace hkm {

namespace {

LatticePoint primitive(const LatticePoint& v) {
    BigInt g = gcd(abs(v.x1), abs(v.x2));
    return {v.x1 / g, v.x2 / g};
}

// Returns (x, y) with a*x + b*y == gcd(a, b) >= 0.
std::pair<BigInt, BigInt> bezout(const BigInt& a, const BigInt& b) {
    BigInt oldR = a, r = b, oldS = 1, s = 0, oldT = 0, t = 1;
    while (r != 0) {
        BigInt q = floorDiv(oldR, r);
        std::tie(oldR, r) = std::make_pair(r, BigInt(oldR - q * r));
        std::tie(oldS, s) = std::make_pair(s, BigInt(oldS - q * s));
        std::tie(oldT, t) = std::make_pair(t, BigInt(oldT - q * t));
    }
    if (oldR < 0) {
        oldS = -oldS;
        oldT = -oldT;
    }
    return {oldS, oldT};
}

// #{t in [lo, hi) : t == residue (mod step)}
BigInt countResidue(const BigInt& lo, const BigInt& hi, const BigInt& residue, const BigInt& step) {
    if (hi <= lo)
        return 0;
    return ceilDiv(hi - residue, step) - ceilDiv(lo - residue, step);
}

} // namespace

std::vector<CornerBox> differenceBoxes(const Staircase& outer, const Staircase& inner) {
    if (outer.empty() || inner.empty())
        throw Error(Errc::EmptyInput, "staircase has no corners");
    for (const Corner& w : inner.corners())
        if (!outer.covers(w))
            throw Error(Errc::NotNested, "inner staircase corner (" + w.s.str() + "," + w.t.str() +
                                             ") lies outside the outer region");
    if (inner.front().s != outer.front().s || inner.back().t != outer.back().t)
        throw Error(Errc::UnboundedRegion,
                    "staircase does not reach both threshold lines; the difference region is unbounded");

    std::set<BigInt> breaks;
    for (const Corner& c : outer.corners()) breaks.insert(c.s);
    for (const Corner& c : inner.corners()) breaks.insert(c.s);
    const BigInt& end = inner.back().s;

    std::vector<CornerBox> columns;
    for (auto it = breaks.begin(); it != breaks.end() && *it < end; ++it) {
        auto next = std::next(it);
        BigInt to = (next == breaks.end() || *next > end) ? end : *next;
        BigInt tLo = *outer.floorT(*it);
        BigInt tHi = *inner.floorT(*it);
        if (tHi > tLo)
            columns.push_back({*it, std::move(to), std::move(tLo), std::move(tHi)});
    }
    return columns;
}

Cone2 makeCone(LatticePoint ray1, LatticePoint ray2) {
    BigInt det = ray1.x1 * ray2.x2 - ray1.x2 * ray2.x1;
    if (det == 0)
        throw Error(Errc::CollinearRays, "rays (" + ray1.x1.str() + "," + ray1.x2.str() + ") and (" +
                                             ray2.x1.str() + "," + ray2.x2.str() +
                                             ") do not span a strongly convex cone");
    Cone2 cone;
    cone.ray1_ = primitive(ray1);
    cone.ray2_ = primitive(ray2);

    cone.normal1_ = {-cone.ray1_.x2, cone.ray1_.x1};
    if (dot(cone.normal1_, cone.ray2_) < 0)
        cone.normal1_ = {-cone.normal1_.x1, -cone.normal1_.x2};
    cone.normal2_ = {-cone.ray2_.x2, cone.ray2_.x1};
    if (dot(cone.normal2_, cone.ray1_) < 0)
        cone.normal2_ = {-cone.normal2_.x1, -cone.normal2_.x2};

    const auto& n1 = cone.normal1_;
    const auto& n2 = cone.normal2_;
    cone.detAbs_ = abs(n1.x1 * n2.x2 - n1.x2 * n2.x1);

    auto [a, b] = bezout(n1.x1, n1.x2);
    cone.unitSection_ = {a, b};
    cone.tPerS_ = floorMod(dot(n2, cone.unitSection_), cone.detAbs_);
    return cone;
}

BigInt Cone2::tResidue(const BigInt& s) const { return floorMod(s * tPerS_, detAbs_); }

bool Cone2::isLatticeCorner(const Corner& c) const { return floorMod(c.t - tResidue(c.s), detAbs_) == 0; }

std::optional<LatticePoint> Cone2::preimage(const Corner& c) const {
    if (!isLatticeCorner(c))
        return std::nullopt;
    // x = s * unitSection + j * ray1, and <normal2, ray1> == detAbs.
    BigInt j = (c.t - c.s * dot(normal2_, unitSection_)) / detAbs_;
    return c.s * unitSection_ + j * ray1_;
}

std::pair<Rat, Rat> Cone2::realPreimage(const Rat& s, const Rat& t) const {
    const auto& n1 = normal1_;
    const auto& n2 = normal2_;
    Rat det(n1.x1 * n2.x2 - n1.x2 * n2.x1);
    return {(s * Rat(n2.x2) - t * Rat(n1.x2)) / det, (t * Rat(n1.x1) - s * Rat(n2.x1)) / det};
}

bool Staircase::covers(const Corner& c) const {
    auto t = floorT(c.s);
    return t && c.t >= *t;
}

std::optional<BigInt> Staircase::floorT(const BigInt& s) const {
    auto it = std::upper_bound(corners_.begin(), corners_.end(), s,
                               [](const BigInt& v, const Corner& c) { return v < c.s; });
    if (it == corners_.begin())
        return std::nullopt;
    return std::prev(it)->t;
}

Staircase Staircase::scaled(const BigInt& k) const {
    Staircase out;
    out.corners_.reserve(corners_.size());
    for (const Corner& c : corners_) out.corners_.push_back(k * c);
    return out;
}

Staircase Staircase::shifted(const Corner& offset) const {
    Staircase out;
    out.corners_.reserve(corners_.size());
    for (const Corner& c : corners_) out.corners_.push_back(c + offset);
    return out;
}

Staircase paretoMinimal(std::vector<Corner> corners) {
    if (corners.empty())
        throw Error(Errc::EmptyInput, "no corners given");
    std::sort(corners.begin(), corners.end(), [](const Corner& a, const Corner& b) {
        return a.s != b.s ? a.s < b.s : a.t < b.t;
    });
    Staircase out;
    for (Corner& c : corners)
        if (out.corners_.empty() || c.t < out.corners_.back().t)
            out.corners_.push_back(std::move(c));
    return out;
}

BigInt countLatticeBetween(const Cone2& cone, const Staircase& outer, const Staircase& inner) {
    const BigInt& step = cone.detAbs();
    BigInt total = 0;
    for (const CornerBox& col : differenceBoxes(outer, inner)) {
        auto rows = [&](const BigInt& from, const BigInt& to) {
            BigInt sum = 0;
            for (BigInt s = from; s < to; ++s)
                sum += countResidue(col.t0, col.t1, cone.tResidue(s), step);
            return sum;
        };
        // The residue pattern repeats with period detAbs in s.
        BigInt width = col.s1 - col.s0;
        BigInt cycles = width / step;
        if (cycles > 0)
            total += cycles * rows(col.s0, col.s0 + step);
        total += rows(col.s0 + cycles * step, col.s1);
    }
    return total;
}

Rat areaBetween(const Cone2& cone, const Staircase& outer, const Staircase& inner) {
    BigInt cornerArea = 0;
    for (const CornerBox& col : differenceBoxes(outer, inner))
        cornerArea += (col.s1 - col.s0) * (col.t1 - col.t0);
    return Rat(cornerArea, cone.detAbs());
}

namespace {

void requireTouchesThreshold(const Corner& threshold, const Staircase& stair) {
    if (stair.empty())
        throw Error(Errc::EmptyInput, "staircase has no corners");
    if (stair.front().s != threshold.s || stair.back().t != threshold.t)
        throw Error(Errc::UnboundedRegion, "staircase minima (" + stair.front().s.str() + "," +
                                               stair.back().t.str() + ") differ from threshold (" +
                                               threshold.s.str() + "," + threshold.t.str() + ")");
}

} // namespace

Rat staircaseComplementArea(const Cone2& cone, const Corner& threshold, const Staircase& stair) {
    requireTouchesThreshold(threshold, stair);
    return areaBetween(cone, Staircase(threshold), stair);
}

BigInt countLatticeComplement(const Cone2& cone, const Corner& threshold, const Staircase& stair) {
    requireTouchesThreshold(threshold, stair);
    return countLatticeBetween(cone, Staircase(threshold), stair);
}

BigInt boundingPerimeter(const Corner& threshold, const Staircase& stair) {
    return 2 * ((stair.back().s - threshold.s) + (stair.front().t - threshold.t));
}

} // namespace hkm
