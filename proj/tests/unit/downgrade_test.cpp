#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gitkit/downgrade.hpp"
#include "gitkit/error.hpp"
#include "gitkit/fan.hpp"
#include "oracles.hpp"

using namespace gitkit;

namespace {

const std::vector<IntVector> kSigma{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};

IntMatrix example_embedding() {
  return IntMatrix::from_rows(std::vector<IntVector>{{1, 0}, {0, 1}, {1, 0}}, 2);
}

Downgrade example() {
  return Downgrade(AffineToricData::from_rays(kSigma, 3), analyze_subtorus(example_embedding()));
}

Cone cone2(std::vector<IntVector> gens) { return Cone::from_generators(gens, 2); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(AnalyzeSubtorus, Example) {
  auto s = analyze_subtorus(example_embedding());
  EXPECT_EQ(s.rank(), 3u);
  EXPECT_EQ(s.sub_rank(), 2u);
  EXPECT_EQ(s.quotient_rank(), 1u);
  EXPECT_EQ(s.character_map, example_embedding().transpose());
  EXPECT_EQ(s.projection.row(0), (IntVector{-1, 0, 1}));
  EXPECT_TRUE((s.character_map * s.kernel).rows() == 2);
  for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ((s.character_map * s.kernel)(r, 0), 0);
}

TEST(AnalyzeSubtorus, Errors) {
  std::vector<IntVector> doubled{{2, 0, 0}};
  EXPECT_EQ(kind_of([&] { analyze_subtorus(doubled, 3); }), ErrorKind::NotSaturated);
  std::vector<IntVector> dependent{{1, 0, 0}, {2, 0, 0}};
  EXPECT_EQ(kind_of([&] { analyze_subtorus(dependent, 3); }), ErrorKind::NotInjective);
  std::vector<IntVector> short_column{{1, 0}};
  EXPECT_EQ(kind_of([&] { analyze_subtorus(short_column, 3); }), ErrorKind::DimensionMismatch);
}

TEST(AnalyzeSubtorus, TrivialAndFull) {
  auto trivial = analyze_subtorus(std::vector<IntVector>{}, 3);
  EXPECT_EQ(trivial.sub_rank(), 0u);
  EXPECT_EQ(trivial.quotient_rank(), 3u);
  auto full = analyze_subtorus(IntMatrix::identity(3));
  EXPECT_EQ(full.quotient_rank(), 0u);
}

TEST(Downgrade, WeightConeIsQuadrant) {
  auto d = example();
  EXPECT_EQ(downgraded_weight_cone(d), cone2({{1, 0}, {0, 1}}));
}

TEST(Downgrade, IdentityAndTrivialSubtori) {
  auto t = AffineToricData::from_rays(kSigma, 3);
  Downgrade same(t, analyze_subtorus(IntMatrix::identity(3)));
  EXPECT_EQ(downgraded_weight_cone(same), t.sigma_dual());
  for (const auto& o : t.orbit_cones()) {
    auto u = orbit_cone_representative(t, o);
    EXPECT_EQ(downgraded_semistable(same, u), semistable_locus(t, u));
  }
  Downgrade none(t, analyze_subtorus(std::vector<IntVector>{}, 3));
  EXPECT_EQ(downgraded_weight_cone(none), Cone::zero(0));
  EXPECT_EQ(downgraded_semistable(none, IntVector{}).size(), 10u);
}

TEST(Downgrade, Loci) {
  auto d = example();
  EXPECT_EQ(downgraded_semistable(d, IntVector{1, 0}).size(), 6u);
  EXPECT_EQ(downgraded_semistable(d, IntVector{0, 1}).size(), 6u);
  EXPECT_EQ(downgraded_semistable(d, IntVector{1, 1}).size(), 3u);
  EXPECT_EQ(downgraded_semistable(d, IntVector{0, 0}).size(), 10u);
  EXPECT_EQ(downgraded_semistable(d, IntVector{5, 0}), downgraded_semistable(d, IntVector{1, 0}));
  EXPECT_TRUE(downgraded_semistable(d, IntVector{-1, 0}).empty());
}

TEST(Downgrade, GitCones) {
  auto d = example();
  EXPECT_EQ(downgraded_git_cone(d, IntVector{1, 0}), cone2({{1, 0}}));
  EXPECT_EQ(downgraded_git_cone(d, IntVector{3, 0}), cone2({{1, 0}}));
  EXPECT_EQ(downgraded_git_cone(d, IntVector{1, 1}), cone2({{1, 0}, {0, 1}}));
  EXPECT_EQ(downgraded_git_cone(d, IntVector{2, 5}), cone2({{1, 0}, {0, 1}}));
  EXPECT_EQ(downgraded_git_cone(d, IntVector{0, 0}), Cone::zero(2));
  EXPECT_THROW(downgraded_git_cone(d, IntVector{-1, 1}), Error);
}

TEST(Downgrade, FanOfExample) {
  auto d = example();
  auto fan = downgraded_git_fan(d);
  EXPECT_EQ(fan.table.size(), 4u);
  EXPECT_TRUE(fan.bijective);
  EXPECT_TRUE(fan.order_reversing);
  EXPECT_FALSE(fan.quasi_fan);
  EXPECT_TRUE(is_fan(fan.cones()));
  for (const auto& row : fan.table) {
    EXPECT_EQ(downgraded_git_cone(d, row.representative), row.cone);
    EXPECT_EQ(downgraded_semistable(d, row.representative), row.locus);
  }
}

TEST(Downgrade, PropUnionMatchesClosedForm) {
  auto d = example();
  for (IntVector v : {IntVector{0, 0}, IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}, IntVector{2, 1},
                      IntVector{1, 3}}) {
    auto pu = prop_union(d, v, 3);
    EXPECT_EQ(pu.locus, downgraded_semistable(d, v)) << v[0] << "," << v[1];
    EXPECT_EQ(prop_git_cone(d, v, 3), downgraded_git_cone(d, v));
    for (const auto& u : pu.representatives) {
      auto image_u = d.subtorus().character_map.apply(u);
      EXPECT_EQ(image_u[0] * v[1], image_u[1] * v[0]);
    }
  }
}

TEST(Downgrade, UnionDecompositionOfDiagonal) {
  auto d = example();
  auto terms = union_decomposition(d, IntVector{1, 1});
  ASSERT_EQ(terms.size(), 2u);
  std::vector<IntVector> degrees{terms[0].degree, terms[1].degree};
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, (std::vector<IntVector>{{0, 1, 1}, {2, 1, -1}}));
  SemistableLocus united(10);
  for (const auto& t : terms) {
    EXPECT_TRUE(t.degree_on_ray);
    united |= t.locus;
  }
  EXPECT_EQ(united, downgraded_semistable(d, IntVector{1, 1}));
}

TEST(Downgrade, LociAreRayHomogeneous) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = oracle::random_pointed_generators(rng, 3, 4, 2, true);
    Downgrade d(AffineToricData::from_rays(gens, 3),
                analyze_subtorus(oracle::random_saturated_embedding(rng, 3, 2, 2)));
    for (const auto& c : d.image_cones()) {
      auto v = c.relative_interior_point();
      for (int n : {2, 3, 5}) {
        EXPECT_EQ(downgraded_semistable(d, scale(v, n)), downgraded_semistable(d, v));
        EXPECT_EQ(downgraded_git_cone(d, scale(v, n)), downgraded_git_cone(d, v));
      }
    }
  }
}

TEST(Downgrade, WeightConeIsImageOfGenerators) {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 3;
    const std::size_t sub = 1 + trial % (n - 1);
    auto gens = oracle::random_pointed_generators(rng, n, n + 1, 2, true);
    auto t = AffineToricData::from_rays(gens, n);
    auto s = analyze_subtorus(oracle::random_saturated_embedding(rng, n, sub, 2));
    std::vector<IntVector> images;
    for (const auto& g : t.generators()) images.push_back(s.character_map.apply(g));
    Downgrade d(t, s);
    EXPECT_EQ(downgraded_weight_cone(d), Cone::from_generators(images, s.sub_rank())) << "trial " << trial;
  }
}

TEST(Downgrade, QuotientActionIsEffective) {
  auto d = example();
  auto cert = check_effective_quotient_action(d);
  EXPECT_TRUE(cert.effective);
  EXPECT_EQ(cert.quotient_rank, 1u);
  EXPECT_EQ(cert.spanned_rank, 1u);
  ASSERT_EQ(cert.differences.size(), 1u);
  EXPECT_EQ(cert.differences[0], (IntVector{1, 0, -1}));
  EXPECT_TRUE(cert.unspanned.empty());

  auto t = AffineToricData::from_rays(kSigma, 3);
  auto same = check_effective_quotient_action(Downgrade(t, analyze_subtorus(IntMatrix::identity(3))));
  EXPECT_TRUE(same.effective);
  EXPECT_EQ(same.quotient_rank, 0u);
  auto none = check_effective_quotient_action(Downgrade(t, analyze_subtorus(std::vector<IntVector>{}, 3)));
  EXPECT_TRUE(none.effective);
  EXPECT_EQ(none.spanned_rank, 3u);
}

TEST(Downgrade, ReferenceRowsWithOffRayTerm) {
  auto d = example();
  std::vector<DowngradeClaim> claims{
      {{1, 0}, {{1, 0, 0}, {1, 0, 1}, {0, 0, 1}}, {{1, 0}}},
      {{0, 1}, {{0, 1, 0}, {1, 1, -1}, {1, 2, -1}}, {{0, 1}}},
      {{1, 1}, {{1, 1, 0}, {2, 1, -1}, {1, 0, 1}}, {{1, 0}, {0, 1}}},
  };
  auto check = check_downgrade_claims(d, claims);
  EXPECT_EQ(check.rows, 3u);
  EXPECT_EQ(check.matching_rows, 2u);
  bool off_ray = false;
  for (const auto& x : check.discrepancies) {
    EXPECT_EQ(x.row, 2u);
    if (x.kind == "union_term_off_ray") {
      off_ray = true;
      EXPECT_EQ(x.degree, (IntVector{1, 0, 1}));
    }
  }
  EXPECT_TRUE(off_ray);

  claims[2].union_degrees = {{1, 1, 0}, {2, 1, -1}, {0, 1, 1}};
  EXPECT_EQ(check_downgrade_claims(d, claims).matching_rows, 3u);
}
