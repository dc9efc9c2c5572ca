#pragma once

#include <optional>
#include <string>

#include "hkmult/families.hpp"

namespace hkm::cli {

/// SVG 1.1 picture of the instance in x-space (one user unit per lattice step,
/// y axis pointing up): the cone's rays in black, W_I in gray, LC_I minus W_I
/// in red, generators as dots.
///
/// With qMark = q the gap is split at (1/q) W_{I^q}: the part of LC_I outside
/// it (symbolic vs ordinary) stays red and the part between (1/q) W_{I^q} and
/// W_I (ordinary vs Frobenius) is green. Every shaded region is emitted as one
/// <polygon> per constant-height column; identical input gives identical bytes.
std::string renderRegionSvg(const ToricInstance& instance, std::optional<unsigned> qMark = std::nullopt);

} // namespace hkm::cli
