#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkmult/ideal.hpp"

namespace hkm {

struct FamilyLabel {
    std::string family; // "veronese", "a", "quadrant" or "explicit"
    long r = 0;
    long m = 0;
};

struct ToricInstance {
    Cone2 cone;
    MonomialIdeal ideal;
    FamilyLabel label;
    std::optional<Rat> closedFormEgHK;
};

/// r-Veronese of k[[x,y]] with I_m = (x^r, x^{r-1}y, ..., x^{r-m}y^m).
/// Lattice model: x^{r-k}y^k -> (1, k); cone spanned by (1,0) and (1,r).
/// Closed form m(m+1)/(2r). Requires r >= 2, 1 <= m <= r-1.
ToricInstance veronese(long r, long m);

/// k[[x,y,z]]/(xy - z^r) with I_m = (x, z^m), using x -> (r,-1), y -> (0,1),
/// z -> (1,0). Closed form m(r-m)/r. Requires r >= 2, 1 <= m <= r-1.
ToricInstance aSingularity(long r, long m);

/// Monomial ideal of k[x,y]; no closed form.
ToricInstance quadrant(std::vector<LatticePoint> gens);

ToricInstance explicitInstance(LatticePoint ray1, LatticePoint ray2, std::vector<LatticePoint> gens);

/// Parses "veronese:r,m", "a:r,m" or "quadrant:(a1,b1);(a2,b2);...".
/// Throws Errc::BadInput on syntax errors.
ToricInstance parseFamily(std::string_view text);

std::string describe(const FamilyLabel& label);

} // namespace hkm
