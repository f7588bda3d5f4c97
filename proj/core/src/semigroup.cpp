#include "gitkit/semigroup.hpp"

#include <algorithm>
#include <set>

#include "gitkit/error.hpp"
#include "gitkit/polyhedron.hpp"

namespace gitkit {

namespace {

// Lattice points of the half-open parallelepiped spanned by the columns of b.
std::vector<IntVector> parallelepiped_points(const IntMatrix& b) {
  const std::size_t d = b.rows();
  SmithForm f = snf(b);
  // Z^d / B Z^d is isomorphic to ⊕ Z/s_i through x -> U x.
  IntMatrix u_inv(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    auto col = solve(f.u, to_rational(unit_vector(d, j)));
    for (std::size_t i = 0; i < d; ++i) u_inv(i, j) = col->at(i).get_num();
  }
  std::vector<Integer> mod(d);
  for (std::size_t i = 0; i < d; ++i) mod[i] = abs(f.s(i, i));

  std::vector<IntVector> out;
  IntVector g(d, Integer(0));
  for (;;) {
    IntVector x = u_inv.apply(std::span<const Integer>(g));
    RatVector lambda = *solve(b, to_rational(x));
    for (std::size_t i = 0; i < d; ++i) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), lambda[i].get_num_mpz_t(), lambda[i].get_den_mpz_t());
      if (fl != 0)
        for (std::size_t r = 0; r < d; ++r) x[r] -= fl * b(r, i);
    }
    out.push_back(std::move(x));
    std::size_t k = 0;
    while (k < d && g[k] + 1 == mod[k]) {
      g[k] = 0;
      ++k;
    }
    if (k == d) break;
    ++g[k];
  }
  return out;
}

// Hilbert basis of a pointed full-dimensional cone in Z^d. Every irreducible
// element lies on a ray or in the fundamental parallelepiped of some
// linearly independent d-subset of rays (Carathéodory), so those points are
// the candidates; they are then sieved by a grading that is positive on c.
std::vector<IntVector> pointed_hilbert_basis(const Cone& c) {
  const std::size_t d = c.rank();
  const auto& rays = c.rays();
  if (d == 0 || rays.empty()) return {};

  std::set<IntVector> candidates(rays.begin(), rays.end());
  std::vector<std::size_t> pick(d);
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  if (rays.size() >= d) {
    for (;;) {
      std::vector<IntVector> cols;
      for (auto i : pick) cols.push_back(rays[i]);
      IntMatrix b = IntMatrix::from_columns(cols, d);
      if (determinant(b) != 0)
        for (auto& p : parallelepiped_points(b))
          if (!is_zero(p)) candidates.insert(std::move(p));
      // next d-subset in lexicographic order
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(d) - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == rays.size() - d + static_cast<std::size_t>(i)) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (auto j = static_cast<std::size_t>(i) + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  IntVector grading(d, Integer(0));
  for (const auto& f : c.facets()) grading = add(grading, f);
  std::vector<std::pair<Integer, IntVector>> ordered;
  for (const auto& x : candidates) ordered.emplace_back(dot(grading, x), x);
  std::sort(ordered.begin(), ordered.end());

  std::vector<IntVector> basis;
  for (const auto& [deg, x] : ordered) {
    bool reducible = false;
    for (const auto& h : basis) {
      IntVector rest = subtract(x, h);
      if (!is_zero(rest) && c.contains(std::span<const Integer>(rest))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

IntVector combine_rows(const std::vector<IntVector>& rows, std::span<const Integer> coeff, std::size_t n) {
  IntVector x(n, Integer(0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) x[c] += coeff[i] * rows[i][c];
  return x;
}

IntVector coordinates_in(const std::vector<IntVector>& basis_rows, const IntVector& x) {
  IntMatrix bt = IntMatrix::from_columns(basis_rows, x.size());
  auto y = solve(bt, to_rational(x));
  if (!y) throw Error(ErrorKind::InvalidInput, "vector outside the span of the lattice basis");
  auto yi = to_integer(*y);
  if (!yi) throw Error(ErrorKind::InvalidInput, "vector outside the lattice");
  return *yi;
}

}  // namespace

std::vector<IntVector> monoid_generators(const Cone& c) {
  const std::size_t n = c.rank();
  if (c.is_zero()) return {};

  // Work inside the saturated lattice of span(c).
  std::vector<IntVector> span_basis = saturated_span_basis(c.generators(), n);
  const std::size_t s = span_basis.size();
  std::vector<IntVector> local_gens;
  for (const auto& g : c.generators()) local_gens.push_back(coordinates_in(span_basis, g));
  Cone local = Cone::from_generators(local_gens, s);

  std::vector<IntVector> local_out;
  if (local.is_pointed()) {
    local_out = pointed_hilbert_basis(local);
  } else {
    const auto& lin = local.lineality();
    IntMatrix q = IntMatrix::from_rows(orthogonal_lattice_basis(lin, s), s);
    IntMatrix section = integral_right_inverse(q);
    Cone quotient = image(q, local);
    for (const auto& h : pointed_hilbert_basis(quotient)) local_out.push_back(section.apply(std::span<const Integer>(h)));
    for (const auto& l : lin) {
      local_out.push_back(l);
      local_out.push_back(negate(l));
    }
  }

  std::vector<IntVector> out;
  for (const auto& y : local_out) out.push_back(combine_rows(span_basis, y, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HilbertBasis hilbert_basis(const Cone& c, std::size_t lattice_rank) {
  if (c.rank() != lattice_rank) throw Error(ErrorKind::DimensionMismatch, "cone rank differs from lattice rank");
  if (!c.is_pointed()) throw Error(ErrorKind::NonPointed, "no finite Hilbert basis: cone has lineality");
  return {c, monoid_generators(c)};
}

SaturationFactor saturation_factor(std::span<const Integer> v, const IntMatrix& grading, const Cone& weight_cone) {
  const std::size_t n = weight_cone.rank();
  const std::size_t r = grading.rows();
  if (grading.cols() != n || v.size() != r)
    throw Error(ErrorKind::DimensionMismatch, "grading does not match the weight cone or degree");
  Cone graded_weight = image(grading, weight_cone);
  if (!graded_weight.contains(v))
    throw Error(ErrorKind::EmptyClass, "degree lies outside the graded weight cone");
  if (is_zero(v)) return {Integer(1), Integer(1)};

  // Fiber polyhedron {u in ω : grading(u) = v} gives the search bound.
  HalfspaceSystem fiber{n, {}, {}};
  for (const auto& f : weight_cone.facets()) {
    fiber.normals.push_back(f);
    fiber.bounds.push_back(0);
  }
  for (const auto& e : weight_cone.equations()) {
    fiber.normals.push_back(e);
    fiber.bounds.push_back(0);
    fiber.normals.push_back(negate(e));
    fiber.bounds.push_back(0);
  }
  for (std::size_t i = 0; i < r; ++i) {
    fiber.normals.push_back(grading.row(i));
    fiber.bounds.push_back(Rational(v[i]));
    fiber.normals.push_back(negate(grading.row(i)));
    fiber.bounds.push_back(Rational(-v[i]));
  }
  std::set<Integer> denominators;
  for (const auto& vertex : analyze(fiber).vertices)
    for (const auto& x : vertex) denominators.insert(Integer(x.get_den()));
  Integer bound = 1;
  for (const auto& d : denominators) bound *= d;

  // Cone of the fiber monoid: ω ∩ grading^{-1}(Q_{>=0} v).
  std::vector<IntVector> ineq = weight_cone.facets();
  std::vector<IntVector> eq = weight_cone.equations();
  IntVector vv(v.begin(), v.end());
  IntMatrix gt = grading.transpose();
  ineq.push_back(gt.apply(std::span<const Integer>(vv)));
  for (const auto& w : orthogonal_lattice_basis(std::vector<IntVector>{vv}, r))
    eq.push_back(gt.apply(std::span<const Integer>(w)));
  Cone fiber_cone = Cone::from_inequalities(ineq, eq, n);

  std::vector<IntVector> kernel = kernel_basis(grading).column_list();
  IntMatrix lift = integral_right_inverse(grading);

  for (Integer k = 1; k <= bound; ++k) {
    // Lattice {u : grading(u) in Z kv} with basis kernel ∪ {lift(kv)}; the
    // last coordinate is the degree.
    std::vector<IntVector> basis = kernel;
    basis.push_back(lift.apply(std::span<const Integer>(scale(vv, k))));
    IntMatrix b = IntMatrix::from_columns(basis, n);
    std::vector<IntVector> local;
    for (const auto& g : fiber_cone.generators()) {
      auto y = solve(b, to_rational(g));
      local.push_back(primitive_direction(*y));
    }
    Cone local_cone = Cone::from_generators(local, basis.size());
    bool generated = true;
    for (const auto& h : monoid_generators(local_cone))
      if (h.back() > 1) {
        generated = false;
        break;
      }
    if (generated) return {k, bound};
  }
  return {std::nullopt, bound};
}

}  // namespace gitkit
