// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gitkit/downgrade.hpp"
#include "gitkit/fan.hpp"
#include "gitkit/polyhedron.hpp"
#include "gitkit/ppdivisor.hpp"
#include "gitkit/semigroup.hpp"
#include "gitkit/toric_git.hpp"
#include "gitkit_cli/problem.hpp"
#include "oracles.hpp"

using namespace gitkit;
using Clock = std::chrono::steady_clock;

namespace {

const std::vector<IntVector> kSigma{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};
const IntVector e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1}, w{1, 1, -1};

std::string text(std::span<const Integer> v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].get_str();
  return s + ")";
}

// Collects failed checks for one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream o;
    o << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& n : notes_) o << "; " << n;
    for (const auto& f : failures_) o << "; failed: " << f;
    return o.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Downgrade example_downgrade() {
  return Downgrade(AffineToricData::from_rays(kSigma, 3),
                   analyze_subtorus(IntMatrix::from_rows(std::vector<IntVector>{{1, 0}, {0, 1}, {1, 0}}, 2)));
}

void hilbert_basis_of_example(Criterion& c) {
  auto start = Clock::now();
  auto hb = hilbert_basis(dualize(Cone::from_generators(kSigma, 3)), 3);
  const double t = seconds_since(start);
  c.expect(hb.elements == std::vector<IntVector>{e3, e2, e1, w}, "basis is {e1, e2, e3, e1+e2-e3}");
  c.expect(t < 1.0, "runtime below 1 s");
  c.note("4 elements in " + std::to_string(t) + " s");
}

void orbit_cones_of_example(Criterion& c) {
  auto t = AffineToricData::from_rays(kSigma, 3);
  std::vector<std::size_t> profile(4, 0);
  std::set<std::vector<IntVector>> computed;
  for (const auto& o : orbit_cones(t)) {
    ++profile[o.face.cone.dim()];
    computed.insert(o.face.cone.rays());
  }
  c.expect(t.orbit_cones().size() == 10, "10 orbit cones");
  c.expect(profile == std::vector<std::size_t>{1, 4, 4, 1}, "dimension profile (1,4,4,1)");
  const std::vector<IntVector> coords{e1, e2, e3, w};
  std::set<std::vector<IntVector>> patterns;
  for (const auto& p : oracle::conifold_patterns()) {
    std::vector<IntVector> gens;
    for (auto k : p) gens.push_back(coords[k]);
    patterns.insert(Cone::from_generators(gens, 3).rays());
  }
  c.expect(patterns == computed, "vanishing patterns of xy = zw give the same cones");
}

void git_table_rows(Criterion& c) {
  auto t = AffineToricData::from_rays(kSigma, 3);
  auto cone = [](std::vector<IntVector> g) { return Cone::from_generators(g, 3); };
  const std::vector<std::pair<IntVector, Cone>> rows{
      {e1, cone({e1})},
      {e2, cone({e2})},
      {e3, cone({e3})},
      {add(e1, e3), cone({e1, e3})},
      {add(e2, e3), cone({e2, e3})},
      {add(e1, w), cone({e1, w})},
      {add(e2, w), cone({e2, w})},
  };
  for (const auto& [u, expected] : rows) c.expect(git_cone(t, u) == expected, "lambda" + text(u));

  auto problem = cli::load_problem(std::string(GITKIT_PROBLEMS_DIR) + "/conifold.json");
  auto check = check_git_claims(t, problem.git_claims);
  std::set<std::size_t> contested;
  bool sigma_dual_reported = false, cone_w_reported = false;
  for (const auto& d : check.discrepancies) {
    contested.insert(d.row);
    if (d.degree == add(e1, e2) && d.computed == t.sigma_dual().rays()) sigma_dual_reported = true;
    if (d.degree == w && d.computed == std::vector<IntVector>{w}) cone_w_reported = true;
  }
  c.expect(check.rows == 9 && check.matching_rows == 7, "7 of 9 reference rows match");
  c.expect(contested.size() == 2, "exactly two contested rows");
  c.expect(sigma_dual_reported, "lambda(e1+e2) reported as the dual cone");
  c.expect(cone_w_reported, "lambda(w) reported as Cone(w)");
  for (const auto& d : check.discrepancies)
    c.note("row " + std::to_string(d.row) + " " + d.kind + " at " + text(d.degree));
}

bool order_reversing_on_all_pairs(const GITData& fan, std::size_t& pairs) {
  bool ok = true;
  for (std::size_t a = 0; a < fan.table.size(); ++a)
    for (std::size_t b = a + 1; b < fan.table.size(); ++b) {
      ++pairs;
      const auto& x = fan.table[a];
      const auto& y = fan.table[b];
      ok = ok && (y.cone.contains(x.cone) == y.locus.is_subset_of(x.locus));
      ok = ok && (x.cone.contains(y.cone) == x.locus.is_subset_of(y.locus));
      ok = ok && !(x.locus == y.locus);
    }
  return ok;
}

void order_reversing_bijection(Criterion& c) {
  auto t = AffineToricData::from_rays(kSigma, 3);
  auto fan = git_fan(t);
  std::set<SemistableLocus> loci;
  for (const auto& o : orbit_cones(t)) loci.insert(semistable_locus(t, orbit_cone_representative(t, o)));
  c.expect(loci.size() == 10 && fan.table.size() == 10, "10 loci and 10 GIT cones");
  std::size_t pairs = 0;
  c.expect(order_reversing_on_all_pairs(fan, pairs) && pairs == 45, "order reversal on 45 pairs");
  c.expect(fan.bijective && fan.order_reversing, "library correspondence flags");

  std::mt19937 rng(4);
  std::size_t instances = 0;
  while (instances < 20) {
    const std::size_t d = 2 + instances % 2;
    auto gens = oracle::random_pointed_generators(rng, d, d + 1, 2, true);
    auto rt = AffineToricData::from_rays(gens, d);
    if (rt.generators().size() > 6) continue;
    ++instances;
    auto rf = git_fan(rt);
    std::size_t p = 0;
    c.expect(order_reversing_on_all_pairs(rf, p), "random instance " + std::to_string(instances));
    c.expect(is_fan(rf.cones()), "random fan " + std::to_string(instances));
  }
  c.note("20 random cones");
}

void poset_lemma(Criterion& c) {
  auto t = AffineToricData::from_rays(kSigma, 3);
  auto report = git_equivalence_report(t);
  c.expect(report.entries.size() == 16 && report.agreements == 16, "16/16 subsets agree");
  std::mt19937 rng(5);
  std::size_t agreements = 0, mismatches = 0;
  for (int k = 0; k < 10; ++k) {
    auto gens = oracle::random_pointed_generators(rng, 2 + k % 2, 3 + k % 2, 2, true);
    auto rt = AffineToricData::from_rays(gens, 2 + k % 2);
    if (rt.generators().size() > 10) continue;
    auto r = git_equivalence_report(rt);
    agreements += r.agreements;
    mismatches += r.mismatches;
    for (const auto& row : git_fan(rt).table)
      c.expect(git_cone(rt, row.representative) == row.cone, "definitional fan row");
  }
  c.note("random instances: " + std::to_string(agreements) + " agreements, " + std::to_string(mismatches) +
         " mismatches");
}

void downgraded_fan(Criterion& c) {
  auto d = example_downgrade();
  auto cone2 = [](std::vector<IntVector> g) { return Cone::from_generators(g, 2); };
  const Cone quadrant = cone2({{1, 0}, {0, 1}});
  c.expect(downgraded_weight_cone(d) == quadrant, "weight cone is the quadrant");
  auto fan = downgraded_git_fan(d);
  auto listed = fan.cones();
  std::set<Cone> cones(listed.begin(), listed.end());
  c.expect(cones == std::set<Cone>{Cone::zero(2), cone2({{1, 0}}), cone2({{0, 1}}), quadrant}, "four cones");

  auto problem = cli::load_problem(std::string(GITKIT_PROBLEMS_DIR) + "/conifold.json");
  auto check = check_downgrade_claims(d, problem.downgrade_claims);
  bool cones_match = true;
  for (const auto& x : check.discrepancies) {
    if (x.kind == "git_cone_mismatch" || x.kind == "outside_weight_cone") cones_match = false;
    c.note("row " + std::to_string(x.row) + " " + x.kind + " at " + text(x.degree));
  }
  c.expect(check.rows == 3 && cones_match, "three reference rows have the stated cones");

  const auto& t = d.toric();
  const auto& i = d.subtorus().character_map;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      IntVector v{a, b};
      auto locus = downgraded_semistable(d, v);
      SemistableLocus closed(t.orbit_cones().size());
      for (const auto& o : t.orbit_cones()) {
        std::vector<IntVector> images;
        for (const auto& r : o.face.cone.rays()) images.push_back(i.apply(r));
        if (Cone::from_generators(images, 2).contains(v)) closed.insert(o.id);
      }
      c.expect(locus == closed, "image-membership form at " + text(v));
      c.expect(prop_union(d, v, 3).locus == locus, "union formula at " + text(v));
    }
}

void ppdivisor_of_example(Criterion& c) {
  auto d = example_downgrade();
  auto pp = downgrade_ppdivisor(d);
  const Cone quadrant = Cone::from_generators(std::vector<IntVector>{{1, 0}, {0, 1}}, 2);
  c.expect(pp.base.rank == 1 && pp.base.rays.size() == 2 && pp.base.complete, "base is the projective line");
  c.expect(pp.tail == quadrant, "tail is the quadrant");
  std::set<RatVector> vertices;
  bool single = true;
  for (const auto& coef : pp.coefficients) {
    single = single && coef.vertices().size() == 1 && coef.tail() == quadrant;
    if (!coef.vertices().empty()) vertices.insert(coef.vertices().front());
  }
  c.expect(single && vertices == std::set<RatVector>{{1, 0}, {0, 1}}, "coefficients (1,0)+Q and (0,1)+Q");
  c.expect(check_proper(pp).verdict == Verdict::Yes, "proper");
}

void reconstruction(Criterion& c) {
  auto d = example_downgrade();
  auto pp = downgrade_ppdivisor(d);
  auto report = verify_reconstruction(d, pp, 6);
  c.expect(report.fibers.size() == 49 && report.passed(), "49 fibers agree");
  bool found = false;
  for (const auto& f : report.fibers)
    if (f.degree == IntVector{2, 3}) found = f.fiber_count == 6 && f.section_count == 6;
  c.expect(found, "fiber (2,3) has 6 on both sides");
  std::mt19937 rng(8);
  for (int k = 0; k < 10; ++k) {
    auto gens = oracle::random_pointed_generators(rng, 3, 4, 2, true);
    Downgrade rd(AffineToricData::from_rays(gens, 3),
                 analyze_subtorus(oracle::random_saturated_embedding(rng, 3, 2, 2)));
    auto r = verify_reconstruction(rd, downgrade_ppdivisor(rd), 3);
    c.expect(r.passed(), "random downgrade " + std::to_string(k));
  }
}

IntVector random_dual_point(std::mt19937& rng, const Cone& tail) {
  std::uniform_int_distribution<int> coef(0, 3);
  auto dual = dualize(tail);
  IntVector u(tail.rank(), Integer(0));
  for (const auto& g : dual.generators()) u = add(u, scale(g, coef(rng)));
  return u;
}

TailedPolyhedron random_tailed(std::mt19937& rng, const Cone& tail) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3), count(1, 3);
  std::vector<RatVector> points(count(rng));
  for (auto& p : points) {
    p.resize(tail.rank());
    for (auto& x : p) x = Rational(num(rng), den(rng));
  }
  return TailedPolyhedron::make(points, tail);
}

void property_suites(Criterion& c) {
  std::mt19937 rng(9);
  for (int k = 0; k < 200; ++k) {
    const std::size_t d = 2 + k % 3;
    auto gens = oracle::random_pointed_generators(rng, d, d + 1 + k % 2, 3, k % 4 != 0);
    Cone cone = Cone::from_generators(gens, d);
    c.expect(dualize(dualize(cone)) == cone, "dualize involution " + std::to_string(k));
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = 2 + k % 2;
    Cone tail = Cone::from_generators(oracle::random_pointed_generators(rng, d, d + 1, 2, true), d);
    PolyhedralDivisor pp;
    pp.tail = tail;
    for (int r = 0; r < 2; ++r) pp.coefficients.push_back(random_tailed(rng, tail));
    auto u = random_dual_point(rng, tail), v = random_dual_point(rng, tail);
    auto du = evaluate(pp, u), dv = evaluate(pp, v), duv = evaluate(pp, add(u, v)), d3 = evaluate(pp, scale(u, 3));
    for (std::size_t r = 0; r < du.size(); ++r) {
      c.expect(duv[r] >= du[r] + dv[r], "superadditivity " + std::to_string(k));
      c.expect(d3[r] == 3 * du[r], "homogeneity " + std::to_string(k));
    }
    auto a = pp.coefficients[0], b = pp.coefficients[1];
    auto sum = minkowski_sum(a, b);
    c.expect(sum.min_pairing(u) == a.min_pairing(u) + b.min_pairing(u), "Minkowski additivity " + std::to_string(k));
    c.expect(a.recession_cone() == tail && sum.recession_cone() == tail, "tail recomputation " + std::to_string(k));
  }
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = 2 + k % 3;
    const std::size_t sub = 1 + k % (n - 1);
    auto t = AffineToricData::from_rays(oracle::random_pointed_generators(rng, n, n + 1, 2, true), n);
    auto s = analyze_subtorus(oracle::random_saturated_embedding(rng, n, sub, 2));
    std::vector<IntVector> images;
    for (const auto& g : t.generators()) images.push_back(s.character_map.apply(g));
    Downgrade d(t, s);
    c.expect(downgraded_weight_cone(d) == Cone::from_generators(images, sub), "weight cone image " + std::to_string(k));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"Hilbert basis of the example", hilbert_basis_of_example},
      {"orbit cones of the example", orbit_cones_of_example},
      {"GIT table rows and contested rows", git_table_rows},
      {"order-reversing bijection", order_reversing_bijection},
      {"poset lemma cross-check", poset_lemma},
      {"downgraded GIT fan", downgraded_fan},
      {"pp-divisor of the downgrade", ppdivisor_of_example},
      {"graded reconstruction", reconstruction},
      {"exact property suites", property_suites},
  };
  const auto start = Clock::now();
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Criterion c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    all = all && c.passed();
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << k + 1 << ": " << criteria[k].first << " ("
              << c.summary() << ")" << std::endl;
  }
  const double total = seconds_since(start);
  std::cout << "total " << total << " s" << std::endl;
  return all && total < 300.0 ? 0 : 1;
}
