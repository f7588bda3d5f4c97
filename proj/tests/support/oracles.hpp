#pragma once

// Reference computations used only by the tests. None of them calls the
// library's normal forms or double description; they are brute force.

#include <cstddef>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gitkit/arith.hpp"
#include "gitkit/cone.hpp"
#include "gitkit/downgrade.hpp"

namespace gitkit::oracle {

/// Invariant factors as ratios of gcds of k x k minors.
std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m);

/// Facet normals of a full-dimensional pointed cone by testing every
/// (d-1)-subset of generators: primitive, inward, sorted.
std::vector<IntVector> facets_by_subsets(const std::vector<IntVector>& gens, std::size_t d);

/// Faces of a full-dimensional pointed cone as the sets of generator indices
/// they contain, found by closing facet zero-sets under intersection.
std::set<std::vector<std::size_t>> face_generator_sets(const std::vector<IntVector>& gens, std::size_t d);

/// Is p a nonnegative rational combination of gens? Decided by testing
/// against the brute-force facets (full-dimensional cones only).
bool in_cone(const std::vector<IntVector>& facets, const IntVector& p);

/// Lattice points of the cone in the box |x_i| <= bound that are not a sum of
/// two nonzero lattice points of the cone.
std::vector<IntVector> irreducible_points(const std::vector<IntVector>& facets, std::size_t d, long bound);

/// Can p be written as a nonnegative integer combination of basis elements?
bool decomposes(const IntVector& p, const std::vector<IntVector>& basis, const std::vector<IntVector>& facets);

/// Vanishing patterns of (x, y, z, w) with xy = zw; each is returned as the
/// set of coordinates that do not vanish.
std::vector<std::vector<std::size_t>> conifold_patterns();

/// #{u in Z^n : <u, r> >= 0 for all rays r of sigma, i u = v} by scanning a box.
std::size_t fiber_count(const std::vector<IntVector>& sigma_rays, const IntMatrix& i, const IntVector& v,
                        long bound);

/// Vertices of the convex hull of planar rational points (monotone chain).
std::vector<RatVector> planar_hull(std::vector<RatVector> points);

// ---- random instances ------------------------------------------------------

/// A pointed cone of the given rank with `count` random generators whose
/// entries lie in [-range, range]; full-dimensional when `full` is set.
std::vector<IntVector> random_pointed_generators(std::mt19937& rng, std::size_t rank, std::size_t count, int range,
                                                 bool full);

/// A random rank x sub integer matrix with saturated image.
IntMatrix random_saturated_embedding(std::mt19937& rng, std::size_t rank, std::size_t sub, int range);

}  // namespace gitkit::oracle
