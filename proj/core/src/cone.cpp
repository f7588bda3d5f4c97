#include "gitkit/cone.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>

#include "gitkit/error.hpp"

namespace gitkit {

namespace {

void check_rank(std::size_t rank) {
  if (rank > kMaxConeRank)
    throw Error(ErrorKind::Unsupported,
                "cone rank " + std::to_string(rank) + " exceeds the supported maximum of " +
                    std::to_string(kMaxConeRank));
}

void check_vectors(std::span<const IntVector> vs, std::size_t rank, const char* what) {
  for (const auto& v : vs)
    if (v.size() != rank)
      throw Error(ErrorKind::DimensionMismatch,
                  std::string(what) + " of length " + std::to_string(v.size()) +
                      " in a cone of rank " + std::to_string(rank));
}

// Orthogonal projection of x onto the complement of span(basis), scaled to a
// primitive integer vector (zero if x lies in the span).
IntVector project_out(const IntVector& x, std::span<const IntVector> basis) {
  if (basis.empty()) return primitive(x);
  const std::size_t k = basis.size();
  IntMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) rhs[i] = Rational(dot(basis[i], x));
  auto coeff = solve(gram, rhs);
  RatVector y = to_rational(x);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < x.size(); ++c) y[c] -= (*coeff)[i] * Rational(basis[i][c]);
  return primitive_direction(y);
}

std::vector<IntVector> sorted_unique(std::vector<IntVector> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

}  // namespace

RawVRep hrep_to_vrep(std::span<const IntVector> inequalities, std::size_t n) {
  RawVRep out;
  for (std::size_t i = 0; i < n; ++i) out.lineality.push_back(unit_vector(n, i));
  std::vector<IntVector> processed;

  for (const auto& a : inequalities) {
    if (a.size() != n) throw Error(ErrorKind::DimensionMismatch, "inequality has wrong length");
    if (gitkit::is_zero(a)) continue;

    auto lit = std::find_if(out.lineality.begin(), out.lineality.end(),
                            [&](const IntVector& l) { return dot(a, l) != 0; });
    if (lit != out.lineality.end()) {
      IntVector pivot = *lit;
      out.lineality.erase(lit);
      Integer alpha = dot(a, pivot);
      if (alpha < 0) {
        pivot = negate(pivot);
        alpha = -alpha;
      }
      // Everything else is moved onto the hyperplane a.x = 0 along pivot.
      auto push_to_hyperplane = [&](IntVector& v) {
        Integer beta = dot(a, v);
        if (beta == 0) return;
        v = primitive(subtract(scale(v, alpha), scale(pivot, beta)));
      };
      for (auto& l : out.lineality) push_to_hyperplane(l);
      for (auto& r : out.rays) push_to_hyperplane(r);
      out.rays.push_back(std::move(pivot));
      processed.push_back(a);
      continue;
    }

    std::vector<Integer> slack(out.rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<IntVector> next;
    for (std::size_t r = 0; r < out.rays.size(); ++r) {
      slack[r] = dot(a, out.rays[r]);
      if (slack[r] > 0) pos.push_back(r);
      if (slack[r] < 0) neg.push_back(r);
      if (slack[r] >= 0) next.push_back(out.rays[r]);
    }
    if (!neg.empty() && !pos.empty()) {
      const std::ptrdiff_t quotient_dim =
          static_cast<std::ptrdiff_t>(n) - static_cast<std::ptrdiff_t>(out.lineality.size());
      if (quotient_dim >= 2) {
        const auto needed = static_cast<std::size_t>(quotient_dim - 2);
        // tight[r][j]: processed constraint j is tight on ray r
        std::vector<std::vector<bool>> tight(out.rays.size(), std::vector<bool>(processed.size()));
        for (std::size_t r = 0; r < out.rays.size(); ++r)
          for (std::size_t j = 0; j < processed.size(); ++j)
            tight[r][j] = dot(processed[j], out.rays[r]) == 0;
        for (auto p : pos)
          for (auto q : neg) {
            std::vector<IntVector> common;
            for (std::size_t j = 0; j < processed.size(); ++j)
              if (tight[p][j] && tight[q][j]) common.push_back(processed[j]);
            if (common.size() < needed) continue;
            if (rational_rank(common, n) != needed) continue;
            next.push_back(primitive(subtract(scale(out.rays[q], slack[p]), scale(out.rays[p], slack[q]))));
          }
      }
    }
    out.rays = sorted_unique(std::move(next));
    processed.push_back(a);
  }
  out.rays = sorted_unique(std::move(out.rays));
  return out;
}

Cone Cone::canonical(std::vector<IntVector> rays, std::vector<IntVector> lineality,
                     std::vector<IntVector> facets, std::vector<IntVector> equations,
                     std::size_t rank) {
  Cone c;
  c.rank_ = rank;
  c.lineality_ = saturated_span_basis(lineality, rank);
  c.equations_ = saturated_span_basis(equations, rank);
  for (auto& r : rays) {
    IntVector p = project_out(r, c.lineality_);
    if (!gitkit::is_zero(p)) c.rays_.push_back(std::move(p));
  }
  for (auto& f : facets) {
    IntVector p = project_out(f, c.equations_);
    if (!gitkit::is_zero(p)) c.facets_.push_back(std::move(p));
  }
  c.rays_ = sorted_unique(std::move(c.rays_));
  c.facets_ = sorted_unique(std::move(c.facets_));
  return c;
}

Cone Cone::from_generators(std::span<const IntVector> generators, std::size_t rank) {
  check_rank(rank);
  check_vectors(generators, rank, "generator");
  std::vector<IntVector> gens;
  for (const auto& g : generators)
    if (!gitkit::is_zero(g)) gens.push_back(primitive(g));

  std::vector<IntVector> equations = orthogonal_lattice_basis(gens, rank);
  RawVRep dual = hrep_to_vrep(gens, rank);

  std::vector<IntVector> constraints = dual.rays;
  for (const auto& e : equations) {
    constraints.push_back(e);
    constraints.push_back(negate(e));
  }
  RawVRep primal = hrep_to_vrep(constraints, rank);
  return canonical(std::move(primal.rays), std::move(primal.lineality), std::move(dual.rays),
                   std::move(equations), rank);
}

Cone Cone::from_inequalities(std::span<const IntVector> inequalities,
                             std::span<const IntVector> equations, std::size_t rank) {
  check_rank(rank);
  check_vectors(inequalities, rank, "inequality");
  check_vectors(equations, rank, "equation");
  std::vector<IntVector> rows(inequalities.begin(), inequalities.end());
  for (const auto& e : equations) {
    rows.push_back(e);
    rows.push_back(negate(e));
  }
  RawVRep v = hrep_to_vrep(rows, rank);
  std::vector<IntVector> gens = std::move(v.rays);
  for (const auto& l : v.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return from_generators(gens, rank);
}

Cone Cone::zero(std::size_t rank) { return from_generators({}, rank); }

Cone Cone::full(std::size_t rank) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    gens.push_back(unit_vector(rank, i));
    gens.push_back(negate(unit_vector(rank, i)));
  }
  return from_generators(gens, rank);
}

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(negate(l));
  }
  return g;
}

bool Cone::contains(std::span<const Integer> p) const {
  if (p.size() != rank_) throw Error(ErrorKind::DimensionMismatch, "point rank differs from cone rank");
  for (const auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, p) < 0) return false;
  return true;
}

bool Cone::contains(std::span<const Rational> p) const {
  if (p.size() != rank_) throw Error(ErrorKind::DimensionMismatch, "point rank differs from cone rank");
  for (const auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, p) < 0) return false;
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) throw Error(ErrorKind::DimensionMismatch, "cones of different rank");
  for (const auto& g : other.generators())
    if (!contains(std::span<const Integer>(g))) return false;
  return true;
}

bool Cone::contains_in_relative_interior(std::span<const Integer> p) const {
  if (!contains(p)) return false;
  for (const auto& f : facets_)
    if (dot(f, p) == 0) return false;
  return true;
}

IntVector Cone::relative_interior_point() const {
  IntVector s(rank_, Integer(0));
  for (const auto& r : rays_) s = add(s, r);
  return s;
}

bool operator<(const Cone& a, const Cone& b) {
  return std::tie(a.rank_, a.rays_, a.lineality_, a.facets_, a.equations_) <
         std::tie(b.rank_, b.rays_, b.lineality_, b.facets_, b.equations_);
}

bool table_order(const Cone& a, const Cone& b) {
  const auto da = a.dim(), db = b.dim();
  if (da != db) return da < db;
  if (a.rays() != b.rays()) return a.rays() < b.rays();
  return a < b;
}

Cone double_description(std::span<const IntVector> generators, std::size_t rank) {
  return Cone::from_generators(generators, rank);
}

Cone dualize(const Cone& c) {
  // C^v is generated by the facet normals and ± the equations of C.
  std::vector<IntVector> gens = c.facets();
  for (const auto& e : c.equations()) {
    gens.push_back(e);
    gens.push_back(negate(e));
  }
  return Cone::from_generators(gens, c.rank());
}

std::vector<Face> faces(const Cone& c) {
  const auto& rays = c.rays();
  const auto& facets = c.facets();
  std::vector<std::vector<bool>> zero_set(facets.size(), std::vector<bool>(rays.size()));
  for (std::size_t f = 0; f < facets.size(); ++f)
    for (std::size_t r = 0; r < rays.size(); ++r) zero_set[f][r] = dot(facets[f], rays[r]) == 0;

  std::vector<bool> all(rays.size(), true);
  std::set<std::vector<bool>> seen{all};
  std::vector<std::vector<bool>> queue{all};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<bool> current = queue[head];
    for (std::size_t f = 0; f < facets.size(); ++f) {
      std::vector<bool> next(rays.size());
      for (std::size_t r = 0; r < rays.size(); ++r) next[r] = current[r] && zero_set[f][r];
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  std::vector<Face> out;
  out.reserve(queue.size());
  for (const auto& members : queue) {
    Face face;
    face.supporting_vector.assign(c.rank(), Integer(0));
    for (std::size_t f = 0; f < facets.size(); ++f) {
      bool tight = true;
      for (std::size_t r = 0; r < rays.size() && tight; ++r)
        if (members[r] && !zero_set[f][r]) tight = false;
      if (tight) face.supporting_vector = add(face.supporting_vector, facets[f]);
    }
    std::vector<IntVector> gens;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (members[r]) {
        gens.push_back(rays[r]);
        face.ray_indices.push_back(r);
      }
    for (const auto& l : c.lineality()) {
      gens.push_back(l);
      gens.push_back(negate(l));
    }
    face.cone = Cone::from_generators(gens, c.rank());
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return table_order(a.cone, b.cone); });
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::DimensionMismatch, "intersection of cones of different rank");
  std::vector<IntVector> ineq = a.facets();
  ineq.insert(ineq.end(), b.facets().begin(), b.facets().end());
  std::vector<IntVector> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(ineq, eq, a.rank());
}

Cone image(const IntMatrix& m, const Cone& c) {
  if (m.cols() != c.rank()) throw Error(ErrorKind::DimensionMismatch, "map source rank differs from cone rank");
  std::vector<IntVector> gens;
  for (const auto& g : c.generators()) gens.push_back(m.apply(std::span<const Integer>(g)));
  return Cone::from_generators(gens, m.rows());
}

bool contains(const Cone& c, std::span<const Rational> p) { return c.contains(p); }

IntVector relative_interior_point(std::span<const IntVector> generators) {
  if (generators.empty())
    throw Error(ErrorKind::InvalidInput, "relative interior point of an empty generator list");
  IntVector s(generators.front().size(), Integer(0));
  for (const auto& g : generators) s = add(s, g);
  return s;
}

}  // namespace gitkit
