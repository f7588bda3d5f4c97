#include "gitkit/polyhedron.hpp"

#include <algorithm>

#include "gitkit/error.hpp"

namespace gitkit {

namespace {

IntVector lift(std::span<const Rational> p) {
  Integer den = 1;
  for (const auto& x : p) den = lcm(den, Integer(x.get_den()));
  IntVector out(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = Rational(p[i] * den).get_num();
  out[p.size()] = den;
  return primitive(std::move(out));
}

IntVector extend_zero(std::span<const Integer> v) {
  IntVector out(v.begin(), v.end());
  out.push_back(0);
  return out;
}

RatVector dehomogenize(const IntVector& r) {
  const std::size_t d = r.size() - 1;
  RatVector p(d);
  for (std::size_t i = 0; i < d; ++i) {
    p[i] = Rational(r[i], r[d]);
    p[i].canonicalize();
  }
  return p;
}

}  // namespace

TailedPolyhedron TailedPolyhedron::make(std::span<const RatVector> points, const Cone& tail) {
  if (points.empty()) throw Error(ErrorKind::InvalidInput, "a tailed polyhedron needs at least one point");
  const std::size_t d = tail.rank();
  std::vector<IntVector> gens;
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorKind::DimensionMismatch, "point rank differs from tail rank");
    gens.push_back(lift(p));
  }
  for (const auto& g : tail.generators()) gens.push_back(extend_zero(g));

  TailedPolyhedron out;
  out.tail_ = tail;
  out.homogenization_ = Cone::from_generators(gens, d + 1);
  for (const auto& r : out.homogenization_.rays())
    if (r[d] > 0) out.vertices_.push_back(dehomogenize(r));
  std::sort(out.vertices_.begin(), out.vertices_.end());
  return out;
}

TailedPolyhedron TailedPolyhedron::translate(const RatVector& point, const Cone& tail) {
  return make(std::span<const RatVector>(&point, 1), tail);
}

bool TailedPolyhedron::contains(std::span<const Rational> p) const {
  RatVector h(p.begin(), p.end());
  h.push_back(1);
  return homogenization_.contains(std::span<const Rational>(h));
}

Rational TailedPolyhedron::min_pairing(std::span<const Integer> u) const {
  if (u.size() != rank()) throw Error(ErrorKind::DimensionMismatch, "degree rank differs from polyhedron rank");
  for (const auto& r : tail_.rays())
    if (dot(u, r) < 0) throw Error(ErrorKind::Unbounded, "evaluation unbounded: degree outside the dual of the tail");
  for (const auto& l : tail_.lineality())
    if (dot(u, l) != 0) throw Error(ErrorKind::Unbounded, "evaluation unbounded: degree outside the dual of the tail");
  Rational best = dot(u, std::span<const Rational>(vertices_.front()));
  for (const auto& v : vertices_) best = std::min(best, dot(u, std::span<const Rational>(v)));
  return best;
}

Cone TailedPolyhedron::recession_cone() const {
  const std::size_t d = rank();
  auto truncate = [d](const IntVector& v) { return IntVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d)); };
  std::vector<IntVector> ineq, eq;
  for (const auto& f : homogenization_.facets()) ineq.push_back(truncate(f));
  for (const auto& e : homogenization_.equations()) eq.push_back(truncate(e));
  return Cone::from_inequalities(ineq, eq, d);
}

TailedPolyhedron minkowski_sum(const TailedPolyhedron& a, const TailedPolyhedron& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::DimensionMismatch, "Minkowski sum of polyhedra of different rank");
  if (a.tail() != b.tail()) throw Error(ErrorKind::InvalidInput, "tail mismatch in Minkowski sum");
  std::vector<RatVector> sums;
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) {
      RatVector s(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      sums.push_back(std::move(s));
    }
  return TailedPolyhedron::make(sums, a.tail());
}

namespace {

Cone homogenize(const HalfspaceSystem& system) {
  const std::size_t d = system.rank;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < system.normals.size(); ++i) {
    if (system.normals[i].size() != d) throw Error(ErrorKind::DimensionMismatch, "halfspace normal has wrong length");
    const Rational& b = system.bounds[i];
    Integer den = b.get_den();
    IntVector row(d + 1);
    for (std::size_t c = 0; c < d; ++c) row[c] = system.normals[i][c] * den;
    row[d] = -b.get_num();
    rows.push_back(std::move(row));
  }
  rows.push_back(unit_vector(d + 1, d));
  return Cone::from_inequalities(rows, {}, d + 1);
}

}  // namespace

PolyhedronShape analyze(const HalfspaceSystem& system) {
  Cone c = homogenize(system);
  PolyhedronShape shape;
  const std::size_t d = system.rank;
  for (const auto& r : c.rays()) {
    if (r[d] > 0)
      shape.vertices.push_back(dehomogenize(r));
    else
      shape.bounded = false;
  }
  if (!c.is_pointed()) shape.bounded = false;
  shape.empty = shape.vertices.empty();
  if (shape.empty) shape.bounded = true;
  std::sort(shape.vertices.begin(), shape.vertices.end());
  return shape;
}

std::size_t count_lattice_points(const HalfspaceSystem& system, std::optional<Integer> truncation) {
  const std::size_t d = system.rank;
  PolyhedronShape shape = analyze(system);
  if (shape.empty) return 0;
  if (!shape.bounded && !truncation)
    throw Error(ErrorKind::Unbounded, "lattice point count of an unbounded polyhedron without truncation");

  std::vector<Integer> lo(d), hi(d);
  if (shape.bounded) {
    for (std::size_t i = 0; i < d; ++i) {
      Rational mn = shape.vertices.front()[i], mx = mn;
      for (const auto& v : shape.vertices) {
        mn = std::min(mn, v[i]);
        mx = std::max(mx, v[i]);
      }
      mpz_cdiv_q(lo[i].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
      mpz_fdiv_q(hi[i].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    }
  } else {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = -*truncation;
      hi[i] = *truncation;
    }
  }
  for (std::size_t i = 0; i < d; ++i)
    if (lo[i] > hi[i]) return 0;

  std::size_t count = 0;
  IntVector x = lo;
  for (;;) {
    bool inside = true;
    for (std::size_t i = 0; i < system.normals.size() && inside; ++i)
      if (Rational(dot(system.normals[i], x)) < system.bounds[i]) inside = false;
    if (inside) ++count;
    std::size_t k = 0;
    while (k < d && x[k] == hi[k]) {
      x[k] = lo[k];
      ++k;
    }
    if (k == d) break;
    ++x[k];
  }
  return count;
}

}  // namespace gitkit
