#pragma once

#include <span>
#include <string>

#include "gitkit/cone.hpp"

namespace gitkit::cli {

/// Deterministic SVG drawing of a fan. Rank 1 and 2 fans are drawn directly;
/// rank 3 fans as the cross-section with the hyperplane g = 1, g the sum of
/// the facet normals of the support. Throws NotDrawable for rank > 3 and for
/// rank 3 fans whose support is not pointed.
std::string render_fan_svg(std::span<const Cone> cones, const std::string& title);

}  // namespace gitkit::cli
