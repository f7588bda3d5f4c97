#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gitkit/arith.hpp"

namespace gitkit {

// Largest ambient rank a user-facing problem may have.
inline constexpr std::size_t kMaxProblemRank = 8;
// Cones one rank above the problem rank appear when polyhedra are homogenized.
inline constexpr std::size_t kMaxConeRank = kMaxProblemRank + 1;

/// A rational polyhedral cone C = lin(C) + cone(rays) held in both
/// representations.
///
/// Canonical form: the lineality space and the orthogonal complement of the
/// linear span are stored as HNF lattice bases; rays are primitive and lie in
/// lin(C)^⊥; facet normals are primitive, inward, and lie in span(C). Both
/// ray and facet lists are sorted lexicographically, so equal cones compare
/// equal member-wise and serialize to identical bytes. With these choices
/// duality is the exchange rays <-> facets, lineality <-> equations.
class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::span<const IntVector> generators, std::size_t rank);
  static Cone from_inequalities(std::span<const IntVector> inequalities,
                                std::span<const IntVector> equations, std::size_t rank);
  static Cone zero(std::size_t rank);
  static Cone full(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<IntVector>& rays() const noexcept { return rays_; }
  const std::vector<IntVector>& facets() const noexcept { return facets_; }
  const std::vector<IntVector>& lineality() const noexcept { return lineality_; }
  // Basis of the integer vectors orthogonal to span(C).
  const std::vector<IntVector>& equations() const noexcept { return equations_; }

  std::size_t dim() const noexcept { return rank_ - equations_.size(); }
  bool is_pointed() const noexcept { return lineality_.empty(); }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }
  bool is_zero() const noexcept { return dim() == 0; }

  // Rays together with ± each lineality basis vector.
  std::vector<IntVector> generators() const;

  bool contains(std::span<const Integer> p) const;
  bool contains(std::span<const Rational> p) const;
  bool contains(const Cone& other) const;
  bool contains_in_relative_interior(std::span<const Integer> p) const;

  /// Sum of the extreme rays; lies in the relative interior.
  IntVector relative_interior_point() const;

  friend bool operator==(const Cone& a, const Cone& b) = default;
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  static Cone canonical(std::vector<IntVector> rays, std::vector<IntVector> lineality,
                        std::vector<IntVector> facets, std::vector<IntVector> equations,
                        std::size_t rank);

  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> equations_;
};

struct Face {
  Cone cone;
  IntVector supporting_vector;             // in the dual of the parent
  std::vector<std::size_t> ray_indices;    // parent rays lying on the face
};

Cone double_description(std::span<const IntVector> generators, std::size_t rank);
Cone dualize(const Cone& c);
std::vector<Face> faces(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
Cone image(const IntMatrix& m, const Cone& c);
bool contains(const Cone& c, std::span<const Rational> p);

/// Sum of the given generators; throws on an empty list.
IntVector relative_interior_point(std::span<const IntVector> generators);

/// Ordering used for every output table: dimension, then rays lexicographically.
bool table_order(const Cone& a, const Cone& b);

/// Extreme rays and lineality of {x : a_i . x >= 0}, by the double
/// description method. Rays are primitive but not projected or sorted.
struct RawVRep {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};
RawVRep hrep_to_vrep(std::span<const IntVector> inequalities, std::size_t rank);

}  // namespace gitkit
