#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "gitkit/error.hpp"
#include "gitkit/semigroup.hpp"
#include "oracles.hpp"

using namespace gitkit;

namespace {

const std::vector<IntVector> kSigma{{1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}};

Cone example_dual() { return dualize(Cone::from_generators(kSigma, 3)); }

long box_bound(const Cone& c) {
  Integer best = 1;
  for (std::size_t k = 0; k < c.rank(); ++k) {
    Integer s = 0;
    for (const auto& r : c.rays()) s += abs(r[k]);
    best = std::max(best, s);
  }
  return best.get_si();
}

}  // namespace

TEST(HilbertBasis, Quadrant) {
  auto hb = hilbert_basis(Cone::from_generators(std::vector<IntVector>{{1, 0}, {0, 1}}, 2), 2);
  EXPECT_EQ(hb.elements, (std::vector<IntVector>{{0, 1}, {1, 0}}));
}

TEST(HilbertBasis, ExampleHasFourElements) {
  auto hb = hilbert_basis(example_dual(), 3);
  EXPECT_EQ(hb.elements, (std::vector<IntVector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, -1}}));
}

TEST(HilbertBasis, NonSmoothPlaneCone) {
  auto hb = hilbert_basis(Cone::from_generators(std::vector<IntVector>{{1, 0}, {1, 2}}, 2), 2);
  EXPECT_EQ(hb.elements, (std::vector<IntVector>{{1, 0}, {1, 1}, {1, 2}}));
}

TEST(HilbertBasis, RejectsLineality) {
  EXPECT_THROW(hilbert_basis(Cone::full(2), 2), Error);
}

TEST(HilbertBasis, MatchesBruteForceOnRandomCones) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto gens = oracle::random_pointed_generators(rng, d, d + 1, 2, true);
    Cone c = Cone::from_generators(gens, d);
    auto facets = oracle::facets_by_subsets(c.rays(), d);
    auto expected = oracle::irreducible_points(facets, d, box_bound(c));
    EXPECT_EQ(hilbert_basis(c, d).elements, expected) << "trial " << trial;
  }
}

TEST(HilbertBasis, ElementsAreIrreducibleAndGenerate) {
  std::mt19937 rng(78);
  for (int trial = 0; trial < 10; ++trial) {
    auto gens = oracle::random_pointed_generators(rng, 3, 4, 2, true);
    Cone c = Cone::from_generators(gens, 3);
    auto basis = hilbert_basis(c, 3).elements;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t e = 0; e < basis.size(); ++e)
          EXPECT_NE(add(basis[a], basis[b]), basis[e]);
    auto facets = oracle::facets_by_subsets(c.rays(), 3);
    Integer top = 0;
    for (const auto& h : basis)
      for (const auto& x : h) top = std::max(top, Integer(abs(x)));
    const long bound = std::min<long>(5 * top.get_si(), 6);
    IntVector x(3, Integer(-bound));
    for (;;) {
      if (oracle::in_cone(facets, x)) EXPECT_TRUE(oracle::decomposes(x, basis, facets));
      std::size_t j = 0;
      while (j < 3 && x[j] == bound) x[j++] = -bound;
      if (j == 3) break;
      ++x[j];
    }
  }
}

TEST(HilbertBasis, UnimodularInvariance) {
  IntMatrix g = IntMatrix::from_rows(std::vector<IntVector>{{1, 1, 0}, {0, 1, 0}, {2, 0, 1}}, 3);
  ASSERT_TRUE(is_unimodular(g));
  Cone c = example_dual();
  auto base = hilbert_basis(c, 3).elements;
  auto moved = hilbert_basis(image(g, c), 3).elements;
  std::vector<IntVector> mapped;
  for (const auto& h : base) mapped.push_back(g.apply(h));
  std::sort(mapped.begin(), mapped.end());
  EXPECT_EQ(moved, mapped);
}

TEST(MonoidGenerators, LinealityIsIncluded) {
  auto gens = monoid_generators(Cone::full(2));
  EXPECT_EQ(gens.size(), 4u);
  auto half = monoid_generators(Cone::from_generators(std::vector<IntVector>{{1, 0}, {0, 1}, {0, -1}}, 2));
  EXPECT_EQ(half.size(), 3u);
}

TEST(SaturationFactor, ToricGradingIsSaturated) {
  Cone dual = example_dual();
  for (const auto& u : hilbert_basis(dual, 3).elements) {
    auto k = saturation_factor(u, IntMatrix::identity(3), dual);
    ASSERT_TRUE(k.k.has_value());
    EXPECT_EQ(*k.k, 1);
  }
}

TEST(SaturationFactor, ExampleDowngrade) {
  IntMatrix i = IntMatrix::from_rows(std::vector<IntVector>{{1, 0, 1}, {0, 1, 0}}, 3);
  Cone dual = example_dual();
  for (IntVector v : {IntVector{1, 0}, IntVector{1, 1}, IntVector{0, 1}, IntVector{0, 0}}) {
    auto k = saturation_factor(v, i, dual);
    ASSERT_TRUE(k.k.has_value());
    EXPECT_EQ(*k.k, 1);
  }
  EXPECT_THROW(saturation_factor(IntVector{-1, 0}, i, dual), Error);
}

TEST(SaturationFactor, NonSaturatedDegree) {
  // Degree 2 contains (2, -1), which is not a sum of degree-1 points.
  Cone c = Cone::from_generators(std::vector<IntVector>{{2, -1}, {0, 1}}, 2);
  IntMatrix grading = IntMatrix::from_rows(std::vector<IntVector>{{1, 0}}, 2);
  auto k = saturation_factor(IntVector{1}, grading, c);
  ASSERT_TRUE(k.k.has_value());
  EXPECT_EQ(*k.k, 2);
}
