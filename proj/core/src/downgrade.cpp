#include "gitkit/downgrade.hpp"

#include <algorithm>
#include <cmath>

#include "gitkit/error.hpp"
#include "gitkit/fan.hpp"
#include "gitkit/parallel.hpp"

namespace gitkit {

namespace {

constexpr double kMaxEnumeration = 2e6;

void check_length(std::span<const Integer> v, std::size_t n, const char* what) {
  if (v.size() != n)
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                                  ", expected " + std::to_string(n));
}

// w = n v for some integer n > 0; for v = 0 this means w = 0.
bool on_positive_ray(std::span<const Integer> w, std::span<const Integer> v) {
  if (is_zero(v)) return is_zero(w);
  std::optional<Integer> n;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) {
      if (w[j] != 0) return false;
      continue;
    }
    if (w[j] % v[j] != 0) return false;
    Integer q = w[j] / v[j];
    if (n && *n != q) return false;
    n = q;
  }
  return n && *n > 0;
}

// Sign-normalized so the first nonzero entry is positive.
IntVector leading_positive(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) v = negate(v);
    break;
  }
  return v;
}

// Every u = Σ α_j u_j, 0 <= α_j <= bound, with i(u) on the positive ray of v.
std::vector<IntVector> ray_representatives(const Downgrade& d, std::span<const Integer> v, unsigned bound) {
  const auto& gens = d.toric().generators();
  const std::size_t k = gens.size();
  if (std::pow(double(bound) + 1, double(k)) > kMaxEnumeration)
    throw Error(ErrorKind::Unsupported, "bounded subset-sum enumeration too large");
  const auto& i = d.subtorus().character_map;
  std::vector<unsigned> alpha(k, 0);
  std::vector<IntVector> out;
  IntVector u(d.subtorus().rank(), Integer(0));
  while (true) {
    if (on_positive_ray(i.apply(u), v)) out.push_back(u);
    std::size_t j = 0;
    while (j < k && alpha[j] == bound) {
      u = subtract(u, scale(gens[j], Integer(bound)));
      alpha[j] = 0;
      ++j;
    }
    if (j == k) break;
    ++alpha[j];
    u = add(u, gens[j]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

SubtorusData analyze_subtorus(const IntMatrix& embedding) {
  const std::size_t n = embedding.rows();
  const std::size_t sub = embedding.cols();
  if (n == 0) throw Error(ErrorKind::InvalidInput, "embedding has no rows");
  if (n > kMaxProblemRank)
    throw Error(ErrorKind::Unsupported, "rank " + std::to_string(n) + " exceeds the limit of " +
                                            std::to_string(kMaxProblemRank));
  SubtorusData s;
  s.embedding = embedding;
  if (sub == 0) {
    s.character_map = IntMatrix(0, n);
    s.kernel = IntMatrix::identity(n);
    s.projection = IntMatrix::identity(n);
    return s;
  }
  if (embedding.rank() != sub)
    throw Error(ErrorKind::NotInjective, "embedding has rank " + std::to_string(embedding.rank()) +
                                             " but " + std::to_string(sub) + " columns");
  for (const auto& f : invariant_factors(embedding))
    if (f != 1)
      throw Error(ErrorKind::NotSaturated, "image of the embedding is not saturated (invariant factor " +
                                               f.get_str() + ")");
  s.character_map = embedding.transpose();
  s.kernel = kernel_basis(s.character_map);
  s.projection = s.kernel.transpose();
  return s;
}

SubtorusData analyze_subtorus(std::span<const IntVector> columns, std::size_t rank) {
  for (const auto& c : columns) check_length(c, rank, "embedding column");
  return analyze_subtorus(IntMatrix::from_columns(columns, rank));
}

Downgrade::Downgrade(AffineToricData toric, SubtorusData subtorus)
    : toric_(std::move(toric)), subtorus_(std::move(subtorus)) {
  if (subtorus_.rank() != toric_.rank())
    throw Error(ErrorKind::DimensionMismatch, "embedding has " + std::to_string(subtorus_.rank()) +
                                                  " rows, expected " + std::to_string(toric_.rank()));
  images_.resize(toric_.orbit_cones().size());
  parallel_for(images_.size(), [&](std::size_t f) {
    images_[f] = image(subtorus_.character_map, toric_.orbit_cones()[f].face.cone);
  });
}

Cone downgraded_weight_cone(const Downgrade& d) {
  return image(d.subtorus().character_map, d.toric().sigma_dual());
}

SemistableLocus downgraded_semistable(const Downgrade& d, std::span<const Integer> v) {
  check_length(v, d.subtorus().sub_rank(), "degree");
  SemistableLocus locus(d.image_cones().size());
  for (std::size_t f = 0; f < d.image_cones().size(); ++f)
    if (d.image_cones()[f].contains(v)) locus.insert(f);
  return locus;
}

PropUnion prop_union(const Downgrade& d, std::span<const Integer> v, unsigned bound) {
  check_length(v, d.subtorus().sub_rank(), "degree");
  PropUnion result;
  result.locus = SemistableLocus(d.toric().orbit_cones().size());
  for (auto& u : ray_representatives(d, v, bound)) {
    auto locus = semistable_locus(d.toric(), u);
    if (locus.empty()) continue;
    result.locus |= locus;
    result.representatives.push_back(std::move(u));
  }
  return result;
}

std::vector<UnionTerm> union_decomposition(const Downgrade& d, std::span<const Integer> v) {
  const auto locus = downgraded_semistable(d, v);
  const auto& os = d.toric().orbit_cones();
  std::vector<UnionTerm> terms;
  for (auto f : locus.ids()) {
    bool minimal = true;
    for (auto g : locus.ids())
      if (g != f && os[f].face.cone.contains(os[g].face.cone)) minimal = false;
    if (!minimal) continue;
    UnionTerm term;
    term.degree = orbit_cone_representative(d.toric(), os[f]);
    term.locus = semistable_locus(d.toric(), term.degree);
    term.degree_on_ray = on_positive_ray(d.subtorus().character_map.apply(term.degree), v);
    terms.push_back(std::move(term));
  }
  std::sort(terms.begin(), terms.end(), [](const UnionTerm& a, const UnionTerm& b) { return a.degree < b.degree; });
  return terms;
}

Cone downgraded_git_cone(const Downgrade& d, std::span<const Integer> v) {
  check_length(v, d.subtorus().sub_rank(), "degree");
  std::vector<Cone> containing;
  for (const auto& c : d.image_cones())
    if (c.contains(v)) containing.push_back(c);
  if (containing.empty()) throw Error(ErrorKind::EmptyClass, "degree lies outside the downgraded weight cone");
  Cone result = containing.front();
  for (std::size_t j = 1; j < containing.size(); ++j) result = intersect(result, containing[j]);
  return result;
}

Cone prop_git_cone(const Downgrade& d, std::span<const Integer> v, unsigned bound) {
  check_length(v, d.subtorus().sub_rank(), "degree");
  std::optional<Cone> result;
  for (const auto& u : ray_representatives(d, v, bound)) {
    if (!d.toric().sigma_dual().contains(std::span<const Integer>(u))) continue;
    Cone c = image(d.subtorus().character_map, git_cone(d.toric(), u));
    result = result ? intersect(*result, c) : c;
  }
  if (!result) throw Error(ErrorKind::EmptyClass, "no bounded representative lies over the degree");
  return *result;
}

std::vector<Cone> DowngradedGITData::cones() const {
  std::vector<Cone> out;
  for (const auto& r : table) out.push_back(r.cone);
  return out;
}

DowngradedGITData downgraded_git_fan(const Downgrade& d) {
  DowngradedGITData data;
  data.weight_cone = downgraded_weight_cone(d);
  data.orbit_cones = d.image_cones();
  std::sort(data.orbit_cones.begin(), data.orbit_cones.end(), table_order);
  data.orbit_cones.erase(std::unique(data.orbit_cones.begin(), data.orbit_cones.end()), data.orbit_cones.end());

  auto chambers = chamber_fan(d.image_cones());
  data.table.resize(chambers.size());
  parallel_for(chambers.size(), [&](std::size_t c) {
    DowngradedRow row;
    row.representative = chambers[c].relative_interior_point();
    row.cone = downgraded_git_cone(d, row.representative);
    row.locus = downgraded_semistable(d, row.representative);
    row.decomposition = union_decomposition(d, row.representative);
    data.table[c] = std::move(row);
  });
  std::vector<SemistableLocus> loci;
  for (const auto& r : data.table) loci.push_back(r.locus);
  auto cones = data.cones();
  std::tie(data.bijective, data.order_reversing) = check_correspondence(cones, loci);
  data.quasi_fan = !data.weight_cone.is_pointed();
  return data;
}

EffectivenessCertificate check_effective_quotient_action(const Downgrade& d) {
  const auto& s = d.subtorus();
  const std::size_t n = s.rank();
  EffectivenessCertificate cert;
  cert.quotient_rank = s.kernel.cols();
  const auto& gens = d.toric().generators();
  IntMatrix u = IntMatrix::from_columns(gens, n);
  std::vector<IntVector> candidates;
  if (!gens.empty()) {
    IntMatrix relations = kernel_basis(s.character_map * u);
    for (const auto& kappa : relations.column_list()) {
      IntVector diff = u.apply(kappa);
      if (!is_zero(diff)) candidates.push_back(leading_positive(std::move(diff)));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  for (auto& c : candidates) {
    auto trial = cert.differences;
    trial.push_back(c);
    if (rational_rank(trial, n) > cert.differences.size()) cert.differences = std::move(trial);
  }
  cert.spanned_rank = cert.differences.size();
  cert.effective = cert.spanned_rank == cert.quotient_rank;
  if (!cert.effective) {
    auto spanned = cert.differences;
    for (const auto& k : s.kernel.column_list()) {
      auto trial = spanned;
      trial.push_back(k);
      if (rational_rank(trial, n) > spanned.size()) {
        spanned = std::move(trial);
        cert.unspanned.push_back(k);
      }
    }
  }
  return cert;
}

ClaimCheck check_downgrade_claims(const Downgrade& d, std::span<const DowngradeClaim> claims) {
  const auto& s = d.subtorus();
  const auto& i = s.character_map;
  ClaimCheck check;
  check.rows = claims.size();
  const Cone weight = downgraded_weight_cone(d);
  for (std::size_t r = 0; r < claims.size(); ++r) {
    const auto& claim = claims[r];
    check_length(claim.degree, s.sub_rank(), "claimed degree");
    for (const auto& u : claim.union_degrees) check_length(u, s.rank(), "union degree");
    for (const auto& g : claim.cone_generators) check_length(g, s.sub_rank(), "cone generator");
    const std::size_t before = check.discrepancies.size();
    const IntVector& v = claim.degree;
    if (!weight.contains(std::span<const Integer>(v))) {
      check.discrepancies.push_back({r, "outside_weight_cone", v, "degree lies outside the downgraded weight cone",
                                     claim.cone_generators, {}});
      continue;
    }
    Cone computed = downgraded_git_cone(d, v);
    Cone claimed = Cone::from_generators(claim.cone_generators, s.sub_rank());
    if (!(computed == claimed))
      check.discrepancies.push_back({r, "git_cone_mismatch", v, "claimed cone differs from the computed GIT cone",
                                     claim.cone_generators, computed.generators()});

    SemistableLocus united(d.toric().orbit_cones().size());
    for (const auto& u : claim.union_degrees) {
      IntVector image_u = i.apply(u);
      if (!on_positive_ray(image_u, v))
        check.discrepancies.push_back({r, "union_term_off_ray", u,
                                       "term does not map to a positive multiple of the degree", {u}, {image_u}});
      united |= semistable_locus(d.toric(), u);
    }
    const auto locus = downgraded_semistable(d, v);
    if (!(united == locus)) {
      std::vector<IntVector> terms;
      for (const auto& t : union_decomposition(d, v)) terms.push_back(t.degree);
      check.discrepancies.push_back({r, "union_mismatch", v,
                                     "union covers " + std::to_string(united.size()) + " orbit cones, locus has " +
                                         std::to_string(locus.size()),
                                     claim.union_degrees, terms});
    }
    if (check.discrepancies.size() == before) ++check.matching_rows;
  }
  return check;
}

}  // namespace gitkit
