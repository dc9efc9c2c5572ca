#include "hkmult/cli/verify.hpp"

#include <functional>

#include "hkmult/error.hpp"
#include "hkmult/invariants.hpp"

namespace hkm::cli {

namespace {

// Lattice points whose corners lie in [s0, s1) x [t0, t1), found by scanning
// the x-space bounding box of that parallelogram.
std::vector<LatticePoint> scanCornerBox(const Cone2& cone, const Corner& lo, const Corner& hi) {
    std::vector<LatticePoint> out;
    if (hi.s <= lo.s || hi.t <= lo.t)
        return out;
    Rat minX, maxX, minY, maxY;
    bool first = true;
    for (const BigInt* s : {&lo.s, &hi.s})
        for (const BigInt* t : {&lo.t, &hi.t}) {
            auto [x, y] = cone.realPreimage(Rat(*s), Rat(*t));
            if (first || x < minX) minX = x;
            if (first || x > maxX) maxX = x;
            if (first || y < minY) minY = y;
            if (first || y > maxY) maxY = y;
            first = false;
        }
    for (BigInt x = floorDiv(numer(minX), denom(minX)); x <= ceilDiv(numer(maxX), denom(maxX)); ++x)
        for (BigInt y = floorDiv(numer(minY), denom(minY)); y <= ceilDiv(numer(maxY), denom(maxY)); ++y) {
            LatticePoint p{x, y};
            Corner c = cone.corner(p);
            if (c.s >= lo.s && c.s < hi.s && c.t >= lo.t && c.t < hi.t)
                out.push_back(std::move(p));
        }
    return out;
}

BigInt scanGap(const Cone2& cone, const Corner& threshold, const Staircase& stair) {
    BigInt n = 0;
    for (const LatticePoint& p : scanCornerBox(cone, threshold, {stair.back().s, stair.front().t}))
        if (!stair.covers(cone.corner(p)))
            ++n;
    return n;
}

CheckResult run(const std::string& name, const std::function<std::string()>& body) {
    try {
        std::string failure = body();
        return {name, failure.empty(), failure.empty() ? "ok" : failure};
    } catch (const std::exception& e) {
        return {name, false, e.what()};
    }
}

} // namespace

std::vector<CheckResult> verifyInstance(const ToricInstance& instance) {
    const MonomialIdeal& ideal = instance.ideal;
    const Cone2& cone = ideal.cone();
    const Staircase& stair = ideal.staircase();
    const Thresholds th = lcThresholds(ideal);
    const Rat area = egHK(ideal);
    const bool saturated = isSaturated(ideal);
    std::vector<CheckResult> results;

    results.push_back(run("closed-form", [&]() -> std::string {
        if (!instance.closedFormEgHK)
            return {};
        if (area != *instance.closedFormEgHK)
            return "egHK " + toString(area) + " != closed form " + toString(*instance.closedFormEgHK);
        return {};
    }));

    results.push_back(run("frobenius-scaling", [&]() -> std::string {
        for (unsigned q : {2u, 3u, 5u}) {
            MonomialIdeal f = frobeniusPower(ideal, q);
            if (!(lcThresholds(f) == th.scaled(q)) || !(f.staircase() == stair.scaled(q)))
                return "thresholds or staircase do not scale at q=" + std::to_string(q);
            if (egHK(f) != Rat(q * q) * area)
                return "egHK does not scale by q^2 at q=" + std::to_string(q);
        }
        return {};
    }));

    results.push_back(run("ordinary-power-thresholds", [&]() -> std::string {
        for (unsigned n : {2u, 3u, 4u})
            if (!(lcThresholds(ordinaryPower(ideal, n)) == th.scaled(n)))
                return "thresholds of I^" + std::to_string(n) + " are not n*(c1,c2)";
        return {};
    }));

    results.push_back(run("dominated-corners", [&]() -> std::string {
        std::vector<Corner> padded(stair.corners().begin(), stair.corners().end());
        for (const Corner& c : stair.corners()) padded.push_back(c + Corner{1, 1});
        Staircase again = paretoMinimal(padded);
        if (!(again == stair) || staircaseComplementArea(cone, th.asCorner(), again) != area)
            return "appending dominated corners changed the region";
        return {};
    }));

    results.push_back(run("lattice-count", [&]() -> std::string {
        for (unsigned q : {1u, 2u, 3u}) {
            Corner thr = th.scaled(q).asCorner();
            Staircase st = stair.scaled(q);
            BigInt fast = countLatticeComplement(cone, thr, st);
            BigInt slow = scanGap(cone, thr, st);
            if (fast != slow)
                return "q=" + std::to_string(q) + ": row count " + fast.str() + " != scan " + slow.str();
        }
        return {};
    }));

    results.push_back(run("lc-thresholds", [&]() -> std::string {
        const BigInt reach = std::max(stair.back().s, stair.front().t);
        const BigInt& d = cone.detAbs();
        auto shifts = scanCornerBox(cone, {reach, reach}, {reach + d + 1, reach + d + 1});
        auto probes = scanCornerBox(cone, {th.c1 - 2, th.c2 - 2}, {th.c1 + reach + 1, th.c2 + reach + 1});
        for (const LatticePoint& p : probes) {
            Corner c = cone.corner(p);
            if (c.dominates(th.asCorner())) {
                for (const LatticePoint& g : shifts)
                    if (!ideal.contains(p + g))
                        return "point above thresholds has p+g outside W_I";
            } else {
                const LatticePoint& ray = c.s < th.c1 ? cone.ray1() : cone.ray2();
                for (int k = 0; k < 50; ++k)
                    if (ideal.contains(p + BigInt(k) * ray))
                        return "point below thresholds has no uncovered strip";
            }
        }
        return {};
    }));

    results.push_back(run("membership-chain", [&]() -> std::string {
        for (unsigned q : {2u, 3u}) {
            MonomialIdeal frob = frobeniusPower(ideal, q);
            MonomialIdeal ord = ordinaryPower(ideal, q);
            Corner sym = th.scaled(q).asCorner();
            BigInt reach = q * std::max(stair.back().s, stair.front().t) + 2;
            for (const LatticePoint& p : scanCornerBox(cone, {0, 0}, {reach, reach})) {
                if (frob.contains(p) && !ord.contains(p))
                    return "I^[q] not inside I^q at q=" + std::to_string(q);
                if (ord.contains(p) && !cone.corner(p).dominates(sym))
                    return "I^q not inside I^(q) at q=" + std::to_string(q);
            }
        }
        return {};
    }));

    results.push_back(run("length-additivity", [&]() -> std::string {
        if (!saturated)
            return {};
        for (unsigned q : {2u, 3u, 4u}) {
            KeylemSplit k = keylemSplit(ideal, q);
            if (k.totalGap != k.symVsOrd + k.ordVsFrob)
                return "q=" + std::to_string(q) + ": " + k.totalGap.str() + " != " + k.symVsOrd.str() + " + " +
                       k.ordVsFrob.str();
        }
        return {};
    }));

    results.push_back(run("ghk-convergence", [&]() -> std::string {
        const BigInt c = convergenceConstant(ideal);
        auto values = ghkFunction(ideal, 2, 5);
        BigInt q = 1;
        for (size_t n = 0; n < values.size(); ++n, q *= 2) {
            Rat err = Rat(values[n], q * q) - area;
            if (abs(err) > Rat(c, q))
                return "n=" + std::to_string(n) + ": |F/q^2 - egHK| = " + toString(abs(err)) + " > C/q";
        }
        return {};
    }));

    results.push_back(run("degeneracy", [&]() -> std::string {
        bool zero = area == 0;
        bool cornerAtThreshold = false;
        for (const Corner& c : stair.corners()) cornerAtThreshold |= (c == th.asCorner());
        if (zero != cornerAtThreshold)
            return "egHK == 0 disagrees with a generator sitting at the thresholds";
        if (saturated && zero != saturationIsPrincipal(ideal))
            return "egHK == 0 disagrees with principality of the saturation";
        return {};
    }));

    results.push_back(run("epsilon-inequality", [&]() -> std::string {
        Rat eps = epsilonEstimate(ideal, 30);
        if (area < eps - Rat(2, 30))
            return "egHK " + toString(area) + " < epsilon estimate " + toString(eps) + " - 2/30";
        return {};
    }));

    results.push_back(run("quasi-polynomial", [&]() -> std::string {
        if (!saturated)
            return {};
        unsigned maxOrder = cone.detAbs() > 64 ? 64u : cone.detAbs().convert_to<unsigned>();
        auto tf = torsionFactorization(ideal, maxOrder);
        if (!tf)
            return {};
        unsigned n = std::max(30u, 8 * tf->order);
        QuasiPolynomial qp = quasiPolyFit(h0Powers(ideal, n), tf->order);
        Rat predicted(newtonMultiplicity(tf->cofactor), BigInt(2 * tf->order * tf->order));
        if (qp.leading() != predicted)
            return "leading coefficient " + toString(qp.leading()) + " != e(J)/(2r^2) = " + toString(predicted);
        return {};
    }));

    return results;
}

} // namespace hkm::cli
