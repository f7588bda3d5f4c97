#include "gitkit_cli/report.hpp"

#include "gitkit/error.hpp"
#include "gitkit/fan.hpp"
#include "gitkit/ppdivisor.hpp"
#include "gitkit/semigroup.hpp"

namespace gitkit::cli {

namespace {

constexpr unsigned kMaxPropBound = 3;

AffineToricData toric_of(const Problem& p) { return AffineToricData::from_rays(p.cone_rays, p.rank); }

Downgrade downgrade_of(const Problem& p) {
  if (!p.embedding) throw Error(ErrorKind::InvalidInput, "/subtorus_embedding: missing field");
  return Downgrade(toric_of(p), analyze_subtorus(*p.embedding));
}

Json ids_json(const SemistableLocus& l) {
  Json out = Json::array();
  for (auto id : l.ids()) out.push_back(id);
  return out;
}

Json claims_json(const ClaimCheck& c) {
  Json out;
  out["rows"] = c.rows;
  out["matching_rows"] = c.matching_rows;
  Json ds = Json::array();
  for (const auto& d : c.discrepancies) {
    Json j;
    j["row"] = d.row;
    j["kind"] = d.kind;
    j["degree"] = to_json(d.degree);
    j["detail"] = d.detail;
    j["claimed"] = to_json(d.claimed);
    j["computed"] = to_json(d.computed);
    ds.push_back(std::move(j));
  }
  out["discrepancies"] = std::move(ds);
  return out;
}

Json subtorus_json(const SubtorusData& s) {
  Json out;
  out["embedding"] = to_json(s.embedding);
  out["character_map"] = to_json(s.character_map);
  out["kernel"] = to_json(s.kernel.column_list());
  out["projection"] = to_json(s.projection);
  return out;
}

Json git_table_json(const AffineToricData& t, const GITData& g) {
  Json rows = Json::array();
  for (const auto& r : g.table) {
    Json j;
    j["representative"] = to_json(r.representative);
    Json subset = Json::array();
    for (auto i : r.representative_subset) subset.push_back(i);
    j["representative_subset"] = std::move(subset);
    j["cone"] = to_json(r.cone);
    j["locus"] = ids_json(r.locus);
    j["locus_size"] = r.locus.size();
    j["upward_closed"] = is_upward_closed(t, r.locus);
    j["correspondence"] = "X^ss(" + vector_text(r.representative) + ") <-> " + cone_text(r.cone);
    rows.push_back(std::move(j));
  }
  return rows;
}

Json proper_json(const ProperReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    Json j;
    j["degree"] = to_json(s.degree);
    j["relative_interior"] = s.interior;
    j["cartier"] = to_string(s.cartier);
    j["semiample"] = to_string(s.semiample);
    j["big"] = to_string(s.big);
    samples.push_back(std::move(j));
  }
  out["samples"] = std::move(samples);
  return out;
}

}  // namespace

std::string vector_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k].get_str();
  return out + ")";
}

std::string cone_text(const Cone& c) {
  std::string out = "Cone(";
  const auto gens = c.generators();
  for (std::size_t k = 0; k < gens.size(); ++k) out += (k ? ", " : "") + vector_text(gens[k]);
  return out + ")";
}

Outcome hilbert_report(const Problem& p) {
  auto t = toric_of(p);
  Outcome o;
  o.report["command"] = "hilbert";
  o.report["input"] = echo(p);
  o.report["sigma"] = to_json(t.sigma());
  o.report["sigma_dual"] = to_json(t.sigma_dual());
  o.report["pointed_dual"] = t.sigma_dual().is_pointed();
  o.report["hilbert_basis"] = to_json(t.generators());
  o.report["size"] = t.generators().size();
  return o;
}

Outcome orbit_cones_report(const Problem& p) {
  auto t = toric_of(p);
  Outcome o;
  o.report["command"] = "orbit-cones";
  o.report["input"] = echo(p);
  o.report["hilbert_basis"] = to_json(t.generators());
  Json cones = Json::array();
  std::vector<std::size_t> profile(t.rank() + 1, 0);
  for (const auto& oc : t.orbit_cones()) {
    Json j;
    j["id"] = oc.id;
    j["dim"] = oc.face.cone.dim();
    j["cone"] = to_json(oc.face.cone);
    j["supporting_vector"] = to_json(oc.face.supporting_vector);
    Json idx = Json::array();
    for (auto g : oc.generator_indices) idx.push_back(g);
    j["generator_indices"] = std::move(idx);
    j["orbit_monoid"] = to_json(orbit_monoid(t, oc));
    j["orbit_lattice"] = to_json(orbit_lattice(t, oc));
    ++profile[oc.face.cone.dim()];
    cones.push_back(std::move(j));
  }
  o.report["count"] = t.orbit_cones().size();
  o.report["dimension_profile"] = profile;
  o.report["orbit_cones"] = std::move(cones);
  return o;
}

Outcome git_fan_report(const Problem& p) {
  auto t = toric_of(p);
  auto g = git_fan(t);
  Outcome o;
  o.report["command"] = "git-fan";
  o.report["input"] = echo(p);
  o.report["hilbert_basis"] = to_json(t.generators());
  o.report["weight_cone"] = to_json(weight_cone(t));
  o.report["table"] = git_table_json(t, g);
  o.report["bijective"] = g.bijective;
  o.report["order_reversing"] = g.order_reversing;
  o.report["quasi_fan"] = g.quasi_fan;
  auto cones = g.cones();
  o.report["fan_axioms"] = is_fan(cones);
  bool upward = true;
  for (const auto& r : g.table) upward = upward && is_upward_closed(t, r.locus);
  o.failed = !g.bijective || !g.order_reversing || !upward;

  if (t.generators().size() <= kMaxPosetGenerators) {
    auto lemma = git_equivalence_report(t);
    Json j;
    j["subsets"] = lemma.entries.size();
    j["agreements"] = lemma.agreements;
    j["mismatches"] = lemma.mismatches;
    Json diffs = Json::array();
    for (const auto& e : lemma.entries) {
      if (e.agrees) continue;
      diffs.push_back(Json{{"mask", e.mask},
                           {"sum", to_json(e.sum)},
                           {"lemma_cone", to_json(e.lemma_cone)},
                           {"definitional_cone", to_json(e.definitional_cone)}});
    }
    j["differences"] = std::move(diffs);
    o.report["poset_lemma"] = std::move(j);
  } else {
    o.report["poset_lemma"] = "skipped: more than 16 generators";
  }
  if (!p.git_claims.empty()) o.report["reference_check"] = claims_json(check_git_claims(t, p.git_claims));
  return o;
}

Outcome downgrade_fan_report(const Problem& p) {
  auto d = downgrade_of(p);
  const auto& t = d.toric();
  auto g = git_fan(t);
  auto dg = downgraded_git_fan(d);
  Outcome o;
  o.report["command"] = "downgrade git-fan";
  o.report["input"] = echo(p);
  o.report["subtorus"] = subtorus_json(d.subtorus());
  o.report["git_table"] = git_table_json(t, g);
  o.report["weight_cone"] = to_json(dg.weight_cone);
  Json images = Json::array();
  for (const auto& c : dg.orbit_cones) images.push_back(to_json(c));
  o.report["orbit_cones"] = std::move(images);

  bool prop_ok = true;
  Json rows = Json::array();
  for (const auto& r : dg.table) {
    Json j;
    j["representative"] = to_json(r.representative);
    j["cone"] = to_json(r.cone);
    j["locus"] = ids_json(r.locus);
    j["locus_size"] = r.locus.size();
    Json terms = Json::array();
    std::string formula = "X^ss(" + vector_text(r.representative) + ") =";
    for (std::size_t k = 0; k < r.decomposition.size(); ++k) {
      const auto& term = r.decomposition[k];
      terms.push_back(Json{{"degree", to_json(term.degree)},
                           {"locus", ids_json(term.locus)},
                           {"degree_on_ray", term.degree_on_ray}});
      formula += (k ? " u X^ss(" : " X^ss(") + vector_text(term.degree) + ")";
    }
    j["union_decomposition"] = std::move(terms);
    j["correspondence"] = formula + " <-> " + cone_text(r.cone);

    unsigned bound = 1;
    PropUnion pu = prop_union(d, r.representative, bound);
    while (!(pu.locus == r.locus) && bound < kMaxPropBound) pu = prop_union(d, r.representative, ++bound);
    const bool union_agrees = pu.locus == r.locus;
    bool cone_agrees = false;
    try {
      cone_agrees = prop_git_cone(d, r.representative, bound) == r.cone;
    } catch (const Error&) {
      cone_agrees = false;
    }
    prop_ok = prop_ok && union_agrees && cone_agrees;
    j["prop_check"] = Json{{"bound", bound},
                           {"representatives", to_json(pu.representatives)},
                           {"union_agrees", union_agrees},
                           {"cone_agrees", cone_agrees}};
    rows.push_back(std::move(j));
  }
  o.report["table"] = std::move(rows);
  o.report["bijective"] = dg.bijective;
  o.report["order_reversing"] = dg.order_reversing;
  o.report["quasi_fan"] = dg.quasi_fan;

  auto cert = check_effective_quotient_action(d);
  o.report["effective_quotient_action"] = Json{{"effective", cert.effective},
                                               {"quotient_rank", cert.quotient_rank},
                                               {"spanned_rank", cert.spanned_rank},
                                               {"differences", to_json(cert.differences)},
                                               {"unspanned", to_json(cert.unspanned)}};
  if (!p.git_claims.empty()) o.report["git_reference_check"] = claims_json(check_git_claims(t, p.git_claims));
  if (!p.downgrade_claims.empty())
    o.report["reference_check"] = claims_json(check_downgrade_claims(d, p.downgrade_claims));
  o.failed = !dg.bijective || !dg.order_reversing || !prop_ok;
  return o;
}

Outcome ppdivisor_report(const Problem& p) {
  auto d = downgrade_of(p);
  auto splitting = make_splitting(d.subtorus());
  auto pp = downgrade_ppdivisor(d, splitting);
  Outcome o;
  o.report["command"] = "downgrade ppdiv";
  o.report["input"] = echo(p);
  o.report["subtorus"] = subtorus_json(d.subtorus());
  o.report["section"] = to_json(splitting.section.column_list());
  o.report["projection_along_section"] = to_json(splitting.projection);
  o.report["ppdivisor"] = to_json(pp);
  const bool tail_ok = tail_matches_weight_cone(pp, d);
  o.report["tail_dual_equals_weight_cone"] = tail_ok;
  auto proper = check_proper(pp);
  o.report["proper"] = proper_json(proper);
  o.failed = !tail_ok || proper.verdict == Verdict::No;
  return o;
}

Outcome verify_report(const Problem& p, unsigned box) {
  auto d = downgrade_of(p);
  auto splitting = make_splitting(d.subtorus());
  auto pp = downgrade_ppdivisor(d, splitting);
  auto rec = verify_reconstruction(d, pp, splitting, box);
  Outcome o;
  o.report["command"] = "verify";
  o.report["input"] = echo(p);
  o.report["box"] = box;
  Json fibers = Json::array();
  std::size_t homogenized_mismatches = 0;
  for (const auto& f : rec.fibers) {
    Json j;
    j["degree"] = to_json(f.degree);
    j["fiber_count"] = f.fiber_count;
    j["section_count"] = f.section_count;
    j["truncated"] = f.truncated;
    j["agrees"] = f.agrees;
    auto sat = saturation_factor(f.degree, d.subtorus().character_map, d.toric().sigma_dual());
    if (sat.k) {
      j["saturation_factor"] = to_json(*sat.k);
      if (homogenized_evaluate(pp, d, f.degree) != evaluate(pp, f.degree) && *sat.k == 1) ++homogenized_mismatches;
    } else {
      j["saturation_factor"] = nullptr;
    }
    j["saturation_bound"] = to_json(sat.bound);
    fibers.push_back(std::move(j));
  }
  o.report["fibers"] = std::move(fibers);
  o.report["fiber_total"] = rec.fibers.size();
  o.report["mismatches"] = rec.mismatches;
  const bool tail_ok = tail_matches_weight_cone(pp, d);
  o.report["tail_dual_equals_weight_cone"] = tail_ok;
  auto proper = check_proper(pp);
  o.report["proper"] = proper.verdict == Verdict::Yes ? "proper" : std::string(to_string(proper.verdict));
  o.report["passed"] = rec.passed() && tail_ok && homogenized_mismatches == 0 && proper.verdict != Verdict::No;
  o.failed = !o.report["passed"].get<bool>();
  return o;
}

Json example_problem() {
  return Json::parse(R"({
  "rank": 3,
  "cone_rays": [[1, 0, 0], [0, 1, 0], [1, 0, 1], [0, 1, 1]],
  "subtorus_embedding": [[1, 0], [0, 1], [1, 0]],
  "options": {"box": 6}
})");
}

Outcome selfcheck_report() {
  Problem p = parse_problem(example_problem());
  auto t = toric_of(p);
  auto d = downgrade_of(p);
  Outcome o;
  o.report["command"] = "selfcheck";
  Json checks = Json::array();
  auto check = [&](const std::string& name, bool ok) {
    checks.push_back(Json{{"check", name}, {"passed", ok}});
    o.failed = o.failed || !ok;
  };
  const std::vector<IntVector> hb{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, -1}};
  check("hilbert basis has four elements", t.generators() == hb);
  check("ten orbit cones", t.orbit_cones().size() == 10);
  auto g = git_fan(t);
  check("git table is an order-reversing bijection", g.table.size() == 10 && g.bijective && g.order_reversing);
  auto lemma = git_equivalence_report(t);
  check("poset lemma agrees on all subsets", lemma.entries.size() == 16 && lemma.mismatches == 0);
  auto dg = downgraded_git_fan(d);
  check("downgraded fan has four cones", dg.table.size() == 4 && dg.bijective && dg.order_reversing);
  auto pp = downgrade_ppdivisor(d);
  check("base is the projective line", pp.base.rays.size() == 2 && pp.base.complete);
  check("pp-divisor is proper", check_proper(pp).verdict == Verdict::Yes);
  auto rec = verify_reconstruction(d, pp, 6);
  check("49 fibers reconstructed", rec.fibers.size() == 49 && rec.passed());
  o.report["checks"] = std::move(checks);
  o.report["passed"] = !o.failed;
  return o;
}

}  // namespace gitkit::cli
