#pragma once

#include <string>
#include <vector>

#include "hkmult/families.hpp"

namespace hkm::cli {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs the library's invariant checks against one instance: closed form,
/// Frobenius and ordinary-power scaling, lattice counts against a direct
/// x-space scan, the facet-threshold saturation rule against a box oracle,
/// the membership chain I^[q] ⊆ I^q ⊆ I^(q), length additivity, convergence of
/// F(n)/q^2, degeneracy, the epsilon inequality and the quasi-polynomial
/// leading coefficient.
std::vector<CheckResult> verifyInstance(const ToricInstance& instance);

} // namespace hkm::cli
