#pragma once

#include <array>
#include <span>
#include <vector>

#include "hkmult/ideal.hpp"

namespace hkm {

/// Generalized Hilbert-Kunz multiplicity of R/I: the area of LC_I minus W_I.
Rat egHK(const MonomialIdeal& ideal);

/// F(n) = length of H^0_m(R/I^[q]) for q = p^n, n = 0..nMax: the lattice points
/// of the gap between q*LC_I and q*W_I.
std::vector<BigInt> ghkFunction(const MonomialIdeal& ideal, unsigned p, unsigned nMax);

/// Constant C with |F(n)/q^2 - egHK| <= C/q: four times the corner-space
/// perimeter of the q = 1 bounding box. (The row-counting error alone is
/// bounded by the box width, so C is not tight.)
BigInt convergenceConstant(const MonomialIdeal& ideal);

/// The three lengths around a reflexive I at exponent q:
///   totalGap  = l(I^(q) / I^[q])  = l(H^0_m(R/I^[q]))
///   symVsOrd  = l(I^(q) / I^q)    = l(H^0_m(R/I^q))
///   ordVsFrob = l(I^q / I^[q])
/// Each is counted separately; totalGap == symVsOrd + ordVsFrob is a check,
/// not a definition.
struct KeylemSplit {
    BigInt totalGap;
    BigInt symVsOrd;
    BigInt ordVsFrob;

    friend bool operator==(const KeylemSplit&, const KeylemSplit&) = default;
};

/// Errc::NotSaturated unless I is saturated.
KeylemSplit keylemSplit(const MonomialIdeal& ideal, unsigned q);

/// l(H^0_m(R/I^n)) for n = 1..nMax (entry 0 is n = 1).
std::vector<BigInt> h0Powers(const MonomialIdeal& ideal, unsigned nMax);

/// l(n) = a2*n^2 + a1*n + a0 on each residue class n = b (mod period), for n >= onsetIndex.
struct QuasiPolynomial {
    unsigned period = 1;
    std::vector<std::array<Rat, 3>> perClassCoefficients; // indexed by n mod period; {a2, a1, a0}
    unsigned onsetIndex = 1;

    Rat evaluate(unsigned n) const;
    const Rat& leading() const { return perClassCoefficients.front()[0]; }
};

/// Fits a quasi-polynomial of degree <= 2 to seq (seq[0] is n = 1) by exact
/// interpolation through the last three samples of each residue class, then
/// walks back while the fit still reproduces the samples. Every class must
/// reproduce at least `window` trailing samples and all classes must share the
/// same leading coefficient; otherwise Errc::NoStabilization.
/// Requires seq.size() >= 7 * period (Errc::BadParameters).
QuasiPolynomial quasiPolyFit(std::span<const BigInt> seq, unsigned period, unsigned window = 5);

/// Hilbert-Samuel multiplicity of an m-primary monomial ideal: twice the area
/// under the lower convex hull of its staircase corners, normalized to x-space.
/// Errors: NotMPrimary; NonIntegralMultiplicity (internal consistency).
BigInt newtonMultiplicity(const MonomialIdeal& ideal);

/// l(H^0_m(R/I^nMax)) / nMax^2, an estimate of the epsilon multiplicity.
Rat epsilonEstimate(const MonomialIdeal& ideal, unsigned nMax);

} // namespace hkm
