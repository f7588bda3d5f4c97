#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gitkit/arith.hpp"
#include "gitkit/cone.hpp"

namespace gitkit {

/// Δ = conv(vertices) + tail, an element of the Minkowski semigroup of
/// polyhedra with a fixed tail cone.
///
/// Built through its homogenization cone over Δ x {1}; the vertices are the
/// extreme rays at height > 0, so they are irredundant by construction. For a
/// tail with lineality the vertices are the representatives orthogonal to it.
class TailedPolyhedron {
 public:
  TailedPolyhedron() = default;

  static TailedPolyhedron make(std::span<const RatVector> points, const Cone& tail);
  static TailedPolyhedron translate(const RatVector& point, const Cone& tail);

  std::size_t rank() const noexcept { return tail_.rank(); }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }
  const Cone& tail() const noexcept { return tail_; }
  const Cone& homogenization() const noexcept { return homogenization_; }

  bool contains(std::span<const Rational> p) const;

  /// min over Δ of <u, .>; throws Unbounded unless u lies in the dual of the tail.
  Rational min_pairing(std::span<const Integer> u) const;

  /// {v : v + Δ ⊆ Δ}, recomputed from the inequality description.
  Cone recession_cone() const;

  friend bool operator==(const TailedPolyhedron& a, const TailedPolyhedron& b) {
    return a.vertices_ == b.vertices_ && a.tail_ == b.tail_;
  }

 private:
  std::vector<RatVector> vertices_;
  Cone tail_;
  Cone homogenization_;
};

TailedPolyhedron minkowski_sum(const TailedPolyhedron& a, const TailedPolyhedron& b);

/// {x in Q^d : normals[i] . x >= bounds[i]}.
struct HalfspaceSystem {
  std::size_t rank = 0;
  std::vector<IntVector> normals;
  std::vector<Rational> bounds;
};

struct PolyhedronShape {
  bool empty = false;
  bool bounded = true;
  std::vector<RatVector> vertices;  // minimal-face representatives
};

PolyhedronShape analyze(const HalfspaceSystem& system);

/// Lattice points of the system. Bounded systems are counted exactly; an
/// unbounded one is counted inside the box |x_i| <= truncation, and throws
/// Unbounded when no truncation is given.
std::size_t count_lattice_points(const HalfspaceSystem& system,
                                 std::optional<Integer> truncation = std::nullopt);

}  // namespace gitkit
