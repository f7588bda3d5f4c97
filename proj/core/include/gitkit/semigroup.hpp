#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gitkit/arith.hpp"
#include "gitkit/cone.hpp"

namespace gitkit {

struct HilbertBasis {
  Cone cone;
  std::vector<IntVector> elements;  // sorted lexicographically
};

/// Unique minimal generating set of c ∩ Z^rank. Throws NonPointed for cones
/// with lineality ("no finite Hilbert basis").
HilbertBasis hilbert_basis(const Cone& c, std::size_t lattice_rank);

/// Minimal generating set of the monoid c ∩ Z^n for any cone: the Hilbert
/// basis of the pointed quotient lifted through an integral section, together
/// with ± a lattice basis of the lineality space.
std::vector<IntVector> monoid_generators(const Cone& c);

struct SaturationFactor {
  std::optional<Integer> k;  // least saturating multiple, if found within the bound
  Integer bound;             // search bound that was used
};

/// Least k such that the fiber monoid {u in ω ∩ M : grading(u) in Z_{>=0} kv}
/// is generated in degrees 0 and 1. The search stops at the product of the
/// distinct denominators among the vertex coordinates of the fiber polyhedron
/// {u in ω : grading(u) = v}; `k` stays empty when that bound is exhausted.
/// Throws EmptyClass when v lies outside grading(ω).
SaturationFactor saturation_factor(std::span<const Integer> v, const IntMatrix& grading,
                                   const Cone& weight_cone);

}  // namespace gitkit
