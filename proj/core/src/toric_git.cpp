#include "gitkit/toric_git.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gitkit/error.hpp"
#include "gitkit/parallel.hpp"

namespace gitkit {

namespace {

void check_degree(const AffineToricData& t, std::span<const Integer> u) {
  if (u.size() != t.rank())
    throw Error(ErrorKind::DimensionMismatch, "degree has length " + std::to_string(u.size()) +
                                                  ", expected " + std::to_string(t.rank()));
}

}  // namespace

AffineToricData AffineToricData::from_rays(std::span<const IntVector> rays, std::size_t rank) {
  if (rank > kMaxProblemRank)
    throw Error(ErrorKind::Unsupported, "rank " + std::to_string(rank) + " exceeds the limit of " +
                                            std::to_string(kMaxProblemRank));
  return from_cone(Cone::from_generators(rays, rank));
}

AffineToricData AffineToricData::from_cone(const Cone& sigma) {
  if (sigma.rank() > kMaxProblemRank)
    throw Error(ErrorKind::Unsupported, "rank " + std::to_string(sigma.rank()) +
                                            " exceeds the limit of " + std::to_string(kMaxProblemRank));
  if (!sigma.is_pointed()) throw Error(ErrorKind::NonPointed, "sigma must be pointed");
  AffineToricData t;
  t.sigma_ = sigma;
  t.sigma_dual_ = dualize(sigma);
  t.generators_ = monoid_generators(t.sigma_dual_);
  std::sort(t.generators_.begin(), t.generators_.end());
  auto fs = faces(t.sigma_dual_);
  t.orbit_cones_.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    OrbitCone o;
    o.id = i;
    o.face = std::move(fs[i]);
    for (std::size_t g = 0; g < t.generators_.size(); ++g)
      if (o.face.cone.contains(std::span<const Integer>(t.generators_[g]))) o.generator_indices.push_back(g);
    t.orbit_cones_.push_back(std::move(o));
  }
  return t;
}

std::vector<std::size_t> SemistableLocus::ids() const {
  std::vector<std::size_t> out;
  for (auto i = members_.find_first(); i != boost::dynamic_bitset<>::npos; i = members_.find_next(i))
    out.push_back(i);
  return out;
}

const std::vector<OrbitCone>& orbit_cones(const AffineToricData& t) { return t.orbit_cones(); }

std::vector<IntVector> orbit_monoid(const AffineToricData& t, const OrbitCone& o) {
  std::vector<IntVector> out;
  for (auto g : o.generator_indices) out.push_back(t.generators()[g]);
  return out;
}

IntMatrix orbit_lattice(const AffineToricData& t, const OrbitCone& o) {
  const std::size_t n = t.rank();
  auto gens = orbit_monoid(t, o);
  if (gens.empty()) return IntMatrix(0, n);
  auto h = hnf(IntMatrix::from_rows(gens, n)).h;
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    auto row = h.row(r);
    if (!is_zero(row)) rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, n);
}

Cone weight_cone(const AffineToricData& t) { return t.sigma_dual(); }

SemistableLocus semistable_locus(const AffineToricData& t, std::span<const Integer> u) {
  check_degree(t, u);
  SemistableLocus locus(t.orbit_cones().size());
  for (const auto& o : t.orbit_cones())
    if (o.face.cone.contains(u)) locus.insert(o.id);
  return locus;
}

Cone git_cone(const AffineToricData& t, std::span<const Integer> u) {
  check_degree(t, u);
  // Faces containing u are exactly the faces containing the smallest one, so
  // the intersection is the face of least dimension among them.
  const Cone* best = nullptr;
  for (const auto& o : t.orbit_cones())
    if (o.face.cone.contains(u) && (best == nullptr || o.face.cone.dim() < best->dim())) best = &o.face.cone;
  if (best == nullptr) throw Error(ErrorKind::EmptyClass, "degree lies outside the weight cone");
  return *best;
}

bool is_upward_closed(const AffineToricData& t, const SemistableLocus& locus) {
  const auto& os = t.orbit_cones();
  for (auto id : locus.ids())
    for (const auto& o : os)
      if (!locus.contains(o.id) && o.face.cone.contains(os[id].face.cone)) return false;
  return true;
}

IntVector orbit_cone_representative(const AffineToricData& t, const OrbitCone& o) {
  IntVector sum(t.rank(), Integer(0));
  for (auto g : o.generator_indices) sum = add(sum, t.generators()[g]);
  return sum;
}

std::vector<Cone> GITData::cones() const {
  std::vector<Cone> out;
  out.reserve(table.size());
  for (const auto& r : table) out.push_back(r.cone);
  return out;
}

std::pair<bool, bool> check_correspondence(std::span<const Cone> cones,
                                           std::span<const SemistableLocus> loci) {
  if (cones.size() != loci.size())
    throw Error(ErrorKind::DimensionMismatch, "cone and locus lists differ in length");
  bool bijective = true;
  bool reversing = true;
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = 0; b < cones.size(); ++b) {
      if (a != b && (cones[a] == cones[b]) != (loci[a] == loci[b])) bijective = false;
      if (cones[b].contains(cones[a]) && !loci[b].is_subset_of(loci[a])) reversing = false;
      if (loci[b].is_subset_of(loci[a]) && !cones[b].contains(cones[a])) reversing = false;
    }
  return {bijective, reversing};
}

GITData git_fan(const AffineToricData& t) {
  GITData data;
  std::vector<GitRow> rows(t.orbit_cones().size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const auto& o = t.orbit_cones()[i];
    GitRow row;
    row.representative = orbit_cone_representative(t, o);
    row.representative_subset = o.generator_indices;
    row.cone = git_cone(t, row.representative);
    row.locus = semistable_locus(t, row.representative);
    rows[i] = std::move(row);
  });
  std::sort(rows.begin(), rows.end(), [](const GitRow& a, const GitRow& b) { return table_order(a.cone, b.cone); });
  for (auto& r : rows)
    if (data.table.empty() || !(data.table.back().cone == r.cone)) data.table.push_back(std::move(r));

  std::vector<Cone> cones = data.cones();
  std::vector<SemistableLocus> loci;
  for (const auto& r : data.table) loci.push_back(r.locus);
  std::tie(data.bijective, data.order_reversing) = check_correspondence(cones, loci);
  data.quasi_fan = !t.sigma_dual().is_pointed();
  return data;
}

SubsetSumPoset subset_sum_poset(const AffineToricData& t) {
  const std::size_t k = t.generators().size();
  if (k > kMaxPosetGenerators)
    throw Error(ErrorKind::Unsupported, std::to_string(k) + " generators exceed the poset limit of " +
                                            std::to_string(kMaxPosetGenerators));
  SubsetSumPoset p;
  p.generator_count = k;
  const std::size_t total = std::size_t{1} << k;
  p.sums.assign(total, IntVector(t.rank(), Integer(0)));
  for (std::size_t mask = 1; mask < total; ++mask) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
    p.sums[mask] = add(p.sums[mask & (mask - 1)], t.generators()[low]);
  }
  std::vector<SemistableLocus> loci(total);
  parallel_for(total, [&](std::size_t mask) { loci[mask] = semistable_locus(t, p.sums[mask]); });

  std::map<SemistableLocus, std::size_t> index;
  p.class_of.resize(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    auto [it, inserted] = index.emplace(loci[mask], p.classes.size());
    if (inserted) p.classes.push_back(loci[mask]);
    p.class_of[mask] = it->second;
  }
  const std::size_t c = p.classes.size();
  p.classes_geq.assign(c, std::vector<bool>(c, false));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) p.classes_geq[a][b] = p.classes[a].is_subset_of(p.classes[b]);
  return p;
}

Cone git_cone_via_poset(const AffineToricData& t, const SubsetSumPoset& poset, std::uint32_t mask) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < poset.generator_count; ++i)
    if (poset.geq(mask, std::uint32_t{1} << i)) gens.push_back(t.generators()[i]);
  return Cone::from_generators(gens, t.rank());
}

PosetLemmaReport git_equivalence_report(const AffineToricData& t) {
  auto poset = subset_sum_poset(t);
  PosetLemmaReport report;
  report.entries.resize(poset.size());
  parallel_for(poset.size(), [&](std::size_t m) {
    auto mask = static_cast<std::uint32_t>(m);
    PosetLemmaEntry e;
    e.mask = mask;
    e.sum = poset.sums[mask];
    e.lemma_cone = git_cone_via_poset(t, poset, mask);
    e.definitional_cone = git_cone(t, e.sum);
    e.agrees = e.lemma_cone == e.definitional_cone;
    report.entries[m] = std::move(e);
  });
  for (const auto& e : report.entries) (e.agrees ? report.agreements : report.mismatches) += 1;
  return report;
}

ClaimCheck check_git_claims(const AffineToricData& t, std::span<const GitClaim> claims) {
  ClaimCheck check;
  check.rows = claims.size();
  for (std::size_t r = 0; r < claims.size(); ++r) {
    const auto& claim = claims[r];
    if (claim.degrees.empty()) throw Error(ErrorKind::InvalidInput, "claim row has no degrees");
    for (const auto& d : claim.degrees) check_degree(t, d);
    for (const auto& g : claim.cone_generators) check_degree(t, g);
    const std::size_t before = check.discrepancies.size();
    const IntVector& u = claim.degrees.front();

    if (!t.sigma_dual().contains(std::span<const Integer>(u))) {
      check.discrepancies.push_back({r, "outside_weight_cone", u, "degree lies outside the weight cone",
                                     claim.cone_generators, {}});
      continue;
    }
    Cone computed = git_cone(t, u);
    Cone claimed = Cone::from_generators(claim.cone_generators, t.rank());
    if (!(computed == claimed))
      check.discrepancies.push_back(
          {r, "git_cone_mismatch", u, "claimed cone differs from the computed GIT cone",
           claim.cone_generators, computed.generators()});

    auto locus = semistable_locus(t, u);
    for (std::size_t j = 1; j < claim.degrees.size(); ++j) {
      const auto& d = claim.degrees[j];
      auto other = semistable_locus(t, d);
      if (other == locus) continue;
      std::string detail = "semistable loci differ: " + std::to_string(locus.size()) + " vs " +
                           std::to_string(other.size()) + " orbit cones";
      std::vector<IntVector> computed_rays;
      if (!other.empty()) computed_rays = git_cone(t, d).generators();
      check.discrepancies.push_back({r, "locus_equality_fails", d, detail, {u, d}, computed_rays});
    }
    if (check.discrepancies.size() == before) ++check.matching_rows;
  }
  return check;
}

}  // namespace gitkit
