#include "hkmult/invariants.hpp"

#include <string>

#include "hkmult/error.hpp"

namespace hkm {

namespace {

bool isPrime(unsigned p) {
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

BigInt gapCount(const MonomialIdeal& ideal, const Thresholds& th) {
    return countLatticeComplement(ideal.cone(), th.asCorner(), ideal.staircase());
}

} // namespace

Rat egHK(const MonomialIdeal& ideal) {
    return staircaseComplementArea(ideal.cone(), lcThresholds(ideal).asCorner(), ideal.staircase());
}

std::vector<BigInt> ghkFunction(const MonomialIdeal& ideal, unsigned p, unsigned nMax) {
    if (!isPrime(p))
        throw Error(Errc::BadParameters, "characteristic " + std::to_string(p) + " is not prime");
    const Thresholds th = lcThresholds(ideal);
    std::vector<BigInt> values;
    values.reserve(nMax + 1);
    BigInt q = 1;
    for (unsigned n = 0; n <= nMax; ++n, q *= p)
        values.push_back(gapCount(frobeniusPower(ideal, q), th.scaled(q)));
    return values;
}

BigInt convergenceConstant(const MonomialIdeal& ideal) {
    return 4 * boundingPerimeter(lcThresholds(ideal).asCorner(), ideal.staircase());
}

KeylemSplit keylemSplit(const MonomialIdeal& ideal, unsigned q) {
    if (q == 0)
        throw Error(Errc::BadParameters, "q must be positive");
    if (!isSaturated(ideal))
        throw Error(Errc::NotSaturated, "the length decomposition needs a reflexive (saturated) ideal");
    const Thresholds symbolic = lcThresholds(ideal).scaled(q);
    const MonomialIdeal frob = frobeniusPower(ideal, q);
    const MonomialIdeal ord = ordinaryPower(ideal, q);
    return {gapCount(frob, symbolic), gapCount(ord, symbolic),
            countLatticeBetween(ideal.cone(), ord.staircase(), frob.staircase())};
}

std::vector<BigInt> h0Powers(const MonomialIdeal& ideal, unsigned nMax) {
    const Thresholds th = lcThresholds(ideal);
    std::vector<BigInt> values;
    values.reserve(nMax);
    MonomialIdeal power = ideal;
    for (unsigned n = 1; n <= nMax; ++n) {
        if (n > 1)
            power = product(power, ideal);
        values.push_back(gapCount(power, th.scaled(n)));
    }
    return values;
}

Rat QuasiPolynomial::evaluate(unsigned n) const {
    const auto& c = perClassCoefficients[n % period];
    Rat x(n);
    return (c[0] * x + c[1]) * x + c[2];
}

QuasiPolynomial quasiPolyFit(std::span<const BigInt> seq, unsigned period, unsigned window) {
    if (period == 0 || seq.size() < 7 * static_cast<size_t>(period))
        throw Error(Errc::BadParameters, "need at least 7 samples per residue class");
    if (window < 3)
        throw Error(Errc::BadParameters, "stabilization window must be at least 3");

    QuasiPolynomial qp;
    qp.period = period;
    qp.perClassCoefficients.resize(period);
    qp.onsetIndex = 1;
    const auto last = static_cast<unsigned>(seq.size());
    auto value = [&](unsigned n) { return Rat(seq[n - 1]); };

    for (unsigned b = 0; b < period; ++b) {
        // Largest n <= last with n == b (mod period), n >= 1.
        unsigned n2 = last - ((last - b) % period + period) % period;
        unsigned n1 = n2 - period;
        unsigned n0 = n1 - period;
        Rat y0 = value(n0), y1 = value(n1), y2 = value(n2);
        Rat d01 = (y1 - y0) / period;
        Rat d12 = (y2 - y1) / period;
        Rat a2 = (d12 - d01) / (2 * period);
        Rat a1 = d01 - a2 * (n0 + n1);
        Rat a0 = y0 - d01 * n0 + a2 * n0 * n1;
        qp.perClassCoefficients[b % period] = {a2, a1, a0};

        unsigned onset = n2;
        unsigned reproduced = 0;
        for (long n = n2; n >= 1; n -= period) {
            if (qp.evaluate(static_cast<unsigned>(n)) != value(static_cast<unsigned>(n)))
                break;
            onset = static_cast<unsigned>(n);
            ++reproduced;
        }
        if (reproduced < window)
            throw Error(Errc::NoStabilization,
                        "residue class " + std::to_string(b) + " mod " + std::to_string(period) +
                            " reproduces only " + std::to_string(reproduced) + " trailing samples");
        qp.onsetIndex = std::max(qp.onsetIndex, onset);
    }
    for (unsigned b = 1; b < period; ++b)
        if (qp.perClassCoefficients[b][0] != qp.perClassCoefficients[0][0])
            throw Error(Errc::NoStabilization, "residue classes 0 and " + std::to_string(b) +
                                                   " disagree on the leading coefficient");
    return qp;
}

BigInt newtonMultiplicity(const MonomialIdeal& ideal) {
    const Thresholds th = lcThresholds(ideal);
    if (th.c1 != 0 || th.c2 != 0)
        throw Error(Errc::NotMPrimary, "ideal is not m-primary (thresholds " + th.c1.str() + "," +
                                           th.c2.str() + ")");

    // Lower convex chain of the corners, which are sorted by s.
    std::vector<Corner> hull;
    for (const Corner& c : ideal.staircase().corners()) {
        while (hull.size() >= 2) {
            const Corner& o = hull[hull.size() - 2];
            const Corner& a = hull.back();
            BigInt cross = (a.s - o.s) * (c.t - o.t) - (a.t - o.t) * (c.s - o.s);
            if (cross > 0)
                break;
            hull.pop_back();
        }
        hull.push_back(c);
    }

    BigInt twiceArea = 0;
    for (size_t i = 0; i + 1 < hull.size(); ++i)
        twiceArea += (hull[i + 1].s - hull[i].s) * (hull[i].t + hull[i + 1].t);

    const BigInt& det = ideal.cone().detAbs();
    if (twiceArea % det != 0)
        throw Error(Errc::NonIntegralMultiplicity,
                    "doubled covolume " + twiceArea.str() + "/" + det.str() + " is not an integer");
    return twiceArea / det;
}

Rat epsilonEstimate(const MonomialIdeal& ideal, unsigned nMax) {
    if (nMax < 10)
        throw Error(Errc::BadParameters, "epsilon estimate needs nMax >= 10");
    auto values = h0Powers(ideal, nMax);
    return Rat(values.back(), BigInt(nMax) * nMax);
}

} // namespace hkm
