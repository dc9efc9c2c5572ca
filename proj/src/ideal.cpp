#include "hkmult/ideal.hpp"

#include <algorithm>

#include "hkmult/error.hpp"

namespace hkm {

MonomialIdeal::MonomialIdeal(Cone2 cone, std::vector<LatticePoint> gens) : cone_(std::move(cone)) {
    if (gens.empty())
        throw Error(Errc::EmptyInput, "a monomial ideal needs at least one generator");
    std::vector<Corner> corners;
    corners.reserve(gens.size());
    for (const LatticePoint& g : gens) {
        if (!cone_.contains(g))
            throw Error(Errc::GeneratorOutsideCone,
                        "generator (" + g.x1.str() + "," + g.x2.str() + ") is not in the cone");
        corners.push_back(cone_.corner(g));
    }
    stair_ = paretoMinimal(std::move(corners));
    gens_.reserve(stair_.size());
    for (const Corner& c : stair_.corners())
        gens_.push_back(*cone_.preimage(c));
}

MonomialIdeal frobeniusPower(const MonomialIdeal& ideal, const BigInt& q) {
    if (q < 1)
        throw Error(Errc::BadParameters, "Frobenius exponent must be positive");
    std::vector<LatticePoint> gens;
    gens.reserve(ideal.generators().size());
    for (const LatticePoint& g : ideal.generators()) gens.push_back(q * g);
    return MonomialIdeal(ideal.cone(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (!(a.cone() == b.cone()))
        throw Error(Errc::BadParameters, "ideals live over different cones");
    std::vector<LatticePoint> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const LatticePoint& g : a.generators())
        for (const LatticePoint& h : b.generators()) gens.push_back(g + h);
    return MonomialIdeal(a.cone(), std::move(gens));
}

MonomialIdeal ordinaryPower(const MonomialIdeal& ideal, unsigned n) {
    if (n == 0)
        throw Error(Errc::BadParameters, "power exponent must be positive");
    MonomialIdeal result = ideal;
    for (unsigned k = 1; k < n; ++k) result = product(result, ideal);
    return result;
}

Thresholds lcThresholds(const MonomialIdeal& ideal) {
    const Staircase& stair = ideal.staircase();
    return {stair.front().s, stair.back().t};
}

MonomialIdeal saturation(const MonomialIdeal& ideal) {
    const Cone2& cone = ideal.cone();
    const Thresholds th = lcThresholds(ideal);
    const BigInt& period = cone.detAbs();
    std::vector<LatticePoint> gens;
    for (BigInt s = th.c1; s < th.c1 + period; ++s) {
        BigInt t = th.c2 + floorMod(cone.tResidue(s) - th.c2, period);
        gens.push_back(*cone.preimage({s, t}));
    }
    return MonomialIdeal(cone, std::move(gens));
}

bool isSaturated(const MonomialIdeal& ideal) {
    const Thresholds th = lcThresholds(ideal);
    return countLatticeComplement(ideal.cone(), th.asCorner(), ideal.staircase()) == 0;
}

bool saturationIsPrincipal(const MonomialIdeal& ideal) {
    return ideal.cone().isLatticeCorner(lcThresholds(ideal).asCorner());
}

std::optional<TorsionFactorization> torsionFactorization(const MonomialIdeal& ideal, unsigned maxOrder) {
    if (!isSaturated(ideal))
        throw Error(Errc::NotSaturated, "torsion factorization needs a saturated (reflexive) ideal");
    const Thresholds th = lcThresholds(ideal);
    for (unsigned r = 1; r <= maxOrder; ++r) {
        auto u = ideal.cone().preimage(th.scaled(r).asCorner());
        if (!u)
            continue;
        MonomialIdeal power = ordinaryPower(ideal, r);
        std::vector<LatticePoint> cofactorGens;
        cofactorGens.reserve(power.generators().size());
        for (const LatticePoint& g : power.generators()) cofactorGens.push_back(g - *u);
        return TorsionFactorization{r, *u, MonomialIdeal(ideal.cone(), std::move(cofactorGens))};
    }
    return std::nullopt;
}

} // namespace hkm
