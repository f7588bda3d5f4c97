#pragma once

#include <span>
#include <vector>

#include "gitkit/cone.hpp"

namespace gitkit {

/// Intersection of every cone in `cones` that contains y. Throws EmptyClass
/// when no member contains y.
Cone chamber_of(std::span<const Cone> cones, std::span<const Integer> y);

/// All distinct chambers of a cone collection, i.e. its coarsest common
/// refinement restricted to the union of the members. Chambers are found by
/// sampling the relative interior of every cone in the intersection closure
/// of the collection. Sorted by table_order.
std::vector<Cone> chamber_fan(std::span<const Cone> cones);

/// Closure of a collection under pairwise intersection.
std::vector<Cone> intersection_closure(std::span<const Cone> cones);

bool is_face_of(const Cone& face, const Cone& cone);

/// Fan axioms: every face of a member is a member and the intersection of two
/// members is a face of each.
bool is_fan(std::span<const Cone> cones);

}  // namespace gitkit
