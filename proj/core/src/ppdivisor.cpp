#include "gitkit/ppdivisor.hpp"

#include <algorithm>

#include "gitkit/error.hpp"
#include "gitkit/fan.hpp"
#include "gitkit/parallel.hpp"
#include "gitkit/semigroup.hpp"

namespace gitkit {

namespace {

IntVector extend(std::span<const Integer> v, const Integer& last) {
  IntVector out(v.begin(), v.end());
  out.push_back(last);
  return out;
}

// Rays of σ ∩ {p x = t v, t >= 0} at height t > 0, dehomogenized.
std::vector<RatVector> slice_vertices(const Cone& sigma, const IntMatrix& p, std::span<const Integer> v) {
  const std::size_t n = sigma.rank();
  std::vector<IntVector> ineqs, eqs;
  for (const auto& f : sigma.facets()) ineqs.push_back(extend(f, 0));
  ineqs.push_back(unit_vector(n + 1, n));
  for (const auto& e : sigma.equations()) eqs.push_back(extend(e, 0));
  for (std::size_t j = 0; j < p.rows(); ++j) eqs.push_back(extend(p.row(j), -v[j]));
  Cone h = Cone::from_inequalities(ineqs, eqs, n + 1);
  std::vector<RatVector> points;
  for (const auto& r : h.rays()) {
    if (r[n] <= 0) continue;
    RatVector x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = Rational(r[k], r[n]);
    points.push_back(std::move(x));
  }
  return points;
}

// {m : <m, v_ρ> >= -a_ρ for all ρ, with equality for ρ in `tight`}.
HalfspaceSystem section_system(const ToricBase& base, const RationalDivisor& a,
                               std::span<const std::size_t> tight = {}) {
  HalfspaceSystem sys;
  sys.rank = base.rank;
  for (std::size_t r = 0; r < base.rays.size(); ++r) {
    sys.normals.push_back(base.rays[r].generator);
    sys.bounds.push_back(-a[r]);
  }
  for (auto r : tight) {
    sys.normals.push_back(negate(base.rays[r].generator));
    sys.bounds.push_back(a[r]);
  }
  return sys;
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::No || b == Verdict::No) return Verdict::No;
  if (a == Verdict::Undecided || b == Verdict::Undecided) return Verdict::Undecided;
  return Verdict::Yes;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::vector<Cone> ToricBase::maximal_cones() const {
  std::vector<Cone> out;
  for (const auto& c : fan) {
    bool maximal = true;
    for (const auto& o : fan)
      if (!(o == c) && o.contains(c)) maximal = false;
    if (maximal) out.push_back(c);
  }
  return out;
}

std::optional<std::size_t> ToricBase::ray_index(std::span<const Integer> generator) const {
  for (std::size_t r = 0; r < rays.size(); ++r)
    if (std::equal(generator.begin(), generator.end(), rays[r].generator.begin(), rays[r].generator.end())) return r;
  return std::nullopt;
}

ToricBase quotient_fan(const Cone& sigma, const SubtorusData& s) {
  if (sigma.rank() != s.rank()) throw Error(ErrorKind::DimensionMismatch, "sigma and embedding ranks differ");
  ToricBase base;
  base.rank = s.quotient_rank();
  if (base.rank == 0) {
    base.fan = {Cone::zero(0)};
    base.complete = true;
    return base;
  }
  std::vector<Cone> projections;
  for (const auto& f : faces(sigma)) projections.push_back(image(s.projection, f.cone));
  base.fan = chamber_fan(projections);
  std::vector<IntVector> rays;
  for (const auto& c : base.fan)
    for (const auto& r : c.rays()) rays.push_back(r);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  for (std::size_t r = 0; r < rays.size(); ++r) base.rays.push_back({"rho_" + std::to_string(r), rays[r]});
  base.complete = image(s.projection, sigma) == Cone::full(base.rank);
  return base;
}

IntMatrix choose_section(const SubtorusData& s) { return integral_right_inverse(s.projection); }

Splitting make_splitting(const SubtorusData& s, const IntMatrix& section) {
  const std::size_t n = s.rank();
  const std::size_t r = s.quotient_rank();
  if (section.rows() != n || section.cols() != r)
    throw Error(ErrorKind::DimensionMismatch, "section must be " + std::to_string(n) + " x " + std::to_string(r));
  if (!(s.projection * section == IntMatrix::identity(r)))
    throw Error(ErrorKind::InvalidInput, "section is not a right inverse of the projection");
  Splitting sp;
  sp.section = section;
  if (s.sub_rank() == 0) {
    sp.projection = IntMatrix(0, n);
    return sp;
  }
  IntMatrix left = integral_right_inverse(s.character_map).transpose();
  IntMatrix complement = IntMatrix::identity(n);
  if (r > 0) {
    IntMatrix sp_matrix = section * s.projection;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) complement(a, b) -= sp_matrix(a, b);
  }
  sp.projection = left * complement;
  return sp;
}

Splitting make_splitting(const SubtorusData& s) { return make_splitting(s, choose_section(s)); }

PolyhedralDivisor downgrade_ppdivisor(const Downgrade& d) { return downgrade_ppdivisor(d, make_splitting(d.subtorus())); }

PolyhedralDivisor downgrade_ppdivisor(const Downgrade& d, const Splitting& splitting) {
  const auto& s = d.subtorus();
  const Cone& sigma = d.toric().sigma();
  auto cert = check_effective_quotient_action(d);
  if (!cert.effective)
    throw Error(ErrorKind::NotEffective, "quotient torus does not act effectively: differences span rank " +
                                             std::to_string(cert.spanned_rank) + " of " +
                                             std::to_string(cert.quotient_rank));
  PolyhedralDivisor pp;
  pp.base = quotient_fan(sigma, s);

  std::vector<IntVector> eqs = sigma.equations();
  for (std::size_t j = 0; j < s.quotient_rank(); ++j) eqs.push_back(s.projection.row(j));
  Cone fiber_tail = Cone::from_inequalities(sigma.facets(), eqs, s.rank());
  pp.tail = image(splitting.projection, fiber_tail);

  pp.coefficients.resize(pp.base.rays.size());
  parallel_for(pp.base.rays.size(), [&](std::size_t r) {
    std::vector<RatVector> points;
    for (const auto& x : slice_vertices(sigma, s.projection, pp.base.rays[r].generator))
      points.push_back(splitting.projection.apply(std::span<const Rational>(x)));
    pp.coefficients[r] = TailedPolyhedron::make(points, pp.tail);
  });
  return pp;
}

RationalDivisor evaluate(const PolyhedralDivisor& pp, std::span<const Integer> u) {
  if (u.size() != pp.coefficient_rank())
    throw Error(ErrorKind::DimensionMismatch, "degree has length " + std::to_string(u.size()) + ", expected " +
                                                  std::to_string(pp.coefficient_rank()));
  if (!dualize(pp.tail).contains(u))
    throw Error(ErrorKind::Unbounded, "evaluation unbounded: degree lies outside the dual of the tail");
  RationalDivisor out;
  out.reserve(pp.coefficients.size());
  for (const auto& c : pp.coefficients) out.push_back(c.min_pairing(u));
  return out;
}

RationalDivisor homogenized_evaluate(const PolyhedralDivisor& pp, const Downgrade& d, std::span<const Integer> v) {
  auto sat = saturation_factor(v, d.subtorus().character_map, d.toric().sigma_dual());
  if (!sat.k)
    throw Error(ErrorKind::BoundExhausted, "no saturating multiple found up to " + sat.bound.get_str());
  auto values = evaluate(pp, scale(v, *sat.k));
  for (auto& x : values) x /= Rational(*sat.k);
  return values;
}

bool tail_matches_weight_cone(const PolyhedralDivisor& pp, const Downgrade& d) {
  return dualize(pp.tail) == downgraded_weight_cone(d);
}

ReconstructionReport verify_reconstruction(const Downgrade& d, const PolyhedralDivisor& pp, unsigned box) {
  return verify_reconstruction(d, pp, make_splitting(d.subtorus()), box);
}

ReconstructionReport verify_reconstruction(const Downgrade& d, const PolyhedralDivisor& pp,
                                           const Splitting& splitting, unsigned box) {
  const auto& s = d.subtorus();
  const std::size_t n = s.rank();
  const std::size_t sub = s.sub_rank();
  const std::size_t r = s.quotient_rank();
  const Cone weight = downgraded_weight_cone(d);
  const auto& sigma_rays = d.toric().sigma().rays();
  const Integer bound(box);

  std::vector<IntVector> degrees;
  IntVector v(sub, -bound);
  for (;;) {
    if (weight.contains(std::span<const Integer>(v))) degrees.push_back(v);
    std::size_t j = sub;
    while (j > 0 && v[j - 1] == bound) v[--j] = -bound;
    if (j == 0) break;
    ++v[j - 1];
  }

  ReconstructionReport report;
  report.box = box;
  report.fibers.resize(degrees.size());
  parallel_for(degrees.size(), [&](std::size_t f) {
    const IntVector& deg = degrees[f];
    FiberCheck check;
    check.degree = deg;

    // The fiber in the coordinates w = S^T u, using u = π^T v + p^T w.
    HalfspaceSystem w_system;
    w_system.rank = r;
    for (const auto& x : sigma_rays) {
      w_system.normals.push_back(s.projection.apply(std::span<const Integer>(x)));
      w_system.bounds.push_back(Rational(-dot(deg, splitting.projection.apply(std::span<const Integer>(x)))));
    }
    const bool fiber_bounded = r == 0 || analyze(w_system).bounded;
    if (fiber_bounded) {
      HalfspaceSystem direct;
      direct.rank = n;
      for (const auto& x : sigma_rays) {
        direct.normals.push_back(x);
        direct.bounds.push_back(0);
      }
      for (std::size_t j = 0; j < sub; ++j) {
        direct.normals.push_back(s.character_map.row(j));
        direct.bounds.push_back(Rational(deg[j]));
        direct.normals.push_back(negate(s.character_map.row(j)));
        direct.bounds.push_back(Rational(-deg[j]));
      }
      check.fiber_count = count_lattice_points(direct);
    } else {
      check.fiber_count = count_lattice_points(w_system, bound);
      check.truncated = true;
    }

    auto a = evaluate(pp, deg);
    if (r == 0) {
      check.section_count = 1;
    } else {
      auto sections = section_system(pp.base, a);
      if (analyze(sections).bounded) {
        check.section_count = count_lattice_points(sections);
      } else {
        check.section_count = count_lattice_points(sections, bound);
        check.truncated = true;
      }
    }
    check.agrees = check.fiber_count == check.section_count;
    report.fibers[f] = std::move(check);
  });
  for (const auto& c : report.fibers)
    if (!c.agrees) ++report.mismatches;
  return report;
}

ProperReport check_proper(const PolyhedralDivisor& pp) {
  const ToricBase& base = pp.base;
  const Cone dual = dualize(pp.tail);
  ProperReport report;
  report.verdict = Verdict::Yes;

  std::vector<std::vector<std::size_t>> max_cone_rays;
  for (const auto& c : base.maximal_cones()) {
    std::vector<std::size_t> ids;
    for (const auto& ray : c.rays())
      if (auto idx = base.ray_index(ray)) ids.push_back(*idx);
    max_cone_rays.push_back(std::move(ids));
  }
  bool support_full = false;
  for (const auto& c : base.fan) support_full = support_full || c.is_full_dimensional();

  for (const auto& face : faces(dual)) {
    ProperSample sample;
    sample.degree = face.cone.relative_interior_point();
    sample.interior = face.cone == dual;
    if (base.rank == 0) {
      sample.cartier = sample.semiample = Verdict::Yes;
      sample.big = sample.interior ? Verdict::Yes : Verdict::Undecided;
    } else {
      auto a = evaluate(pp, sample.degree);
      sample.cartier = Verdict::Yes;
      sample.semiample = support_full ? Verdict::Yes : Verdict::Undecided;
      for (const auto& ids : max_cone_rays) {
        HalfspaceSystem local;
        local.rank = base.rank;
        for (auto id : ids) {
          local.normals.push_back(base.rays[id].generator);
          local.bounds.push_back(-a[id]);
          local.normals.push_back(negate(base.rays[id].generator));
          local.bounds.push_back(a[id]);
        }
        if (analyze(local).empty) sample.cartier = Verdict::No;
        if (sample.semiample == Verdict::Yes && analyze(section_system(base, a, ids)).empty)
          sample.semiample = Verdict::No;
      }
      if (sample.interior) {
        // The section polyhedron is full-dimensional iff its homogenization is.
        std::vector<IntVector> ineqs;
        for (std::size_t r = 0; r < base.rays.size(); ++r) {
          Integer den = a[r].get_den();
          IntVector row = scale(base.rays[r].generator, den);
          row.push_back(a[r].get_num());
          ineqs.push_back(std::move(row));
        }
        ineqs.push_back(unit_vector(base.rank + 1, base.rank));
        Cone h = Cone::from_inequalities(ineqs, {}, base.rank + 1);
        sample.big = h.is_full_dimensional() ? Verdict::Yes : Verdict::No;
      }
    }
    Verdict v = combine(sample.cartier, sample.semiample);
    if (sample.interior) v = combine(v, sample.big);
    report.verdict = combine(report.verdict, v);
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace gitkit
