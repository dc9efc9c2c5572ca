#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "hkmult/families.hpp"
#include "hkmult/invariants.hpp"

namespace hkm::cli {

// {"exact": "p/q", "decimal": <12 significant digits>}
nlohmann::json ratJson(const Rat& value);

// JSON integer when it fits in 64 bits, decimal string otherwise.
nlohmann::json countJson(const BigInt& value);
nlohmann::json countsJson(std::span<const BigInt> values);

nlohmann::json pointJson(const LatticePoint& p);
nlohmann::json instanceJson(const ToricInstance& instance);
nlohmann::json quasiPolynomialJson(const QuasiPolynomial& qp);

} // namespace hkm::cli
