#include "momentcone/polyhedral.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace momentcone;

namespace {

std::set<IntVec> as_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

IntVec unit(std::size_t n, std::size_t i) {
  IntVec v(n, Integer(0));
  v[i] = 1;
  return v;
}

}  // namespace

TEST(Polyhedral, OrthantRays) {
  ConeHRep h{3, {}, {unit(3, 0), unit(3, 1), unit(3, 2)}};
  const auto v = dual_description(h);
  EXPECT_EQ(as_set(v.rays), as_set({unit(3, 0), unit(3, 1), unit(3, 2)}));
  EXPECT_TRUE(v.lineality.empty());
}

TEST(Polyhedral, HalfPlaneHasLineality) {
  const auto v = dual_description(ConeHRep{2, {}, {unit(2, 0)}});
  EXPECT_EQ(v.rays, std::vector<IntVec>{unit(2, 0)});
  EXPECT_EQ(v.lineality.size(), 1u);
}

TEST(Polyhedral, InconsistentSystemIsTheApex) {
  const auto v = dual_description(ConeHRep{2, {}, {to_intvec({1, 0}), to_intvec({-1, -1}), to_intvec({0, 1})}});
  EXPECT_TRUE(v.rays.empty());
  EXPECT_TRUE(v.lineality.empty());
}

TEST(Polyhedral, RedundancyAndDuplicates) {
  ConeHRep h{2, {}, {to_intvec({1, 1}), to_intvec({1, 0}), to_intvec({2, 0}), to_intvec({0, 1})}};
  const auto r = remove_redundant(h);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(r.cone_dim, 2u);
  EXPECT_EQ(r.facets.inequalities, (std::vector<IntVec>{to_intvec({1, 0}), to_intvec({0, 1})}));
}

TEST(Polyhedral, DeficientConeIsReported) {
  ConeHRep h{3, {to_intvec({0, 0, 1})}, {to_intvec({1, 0, 0}), to_intvec({-1, 0, 0}), to_intvec({0, 1, 0})}};
  try {
    remove_redundant(h);
    FAIL() << "expected DimensionDeficiency";
  } catch (const DimensionDeficiency& e) {
    EXPECT_EQ(e.expected, 2u);
    EXPECT_EQ(e.actual, 1u);
    EXPECT_NE(std::string(e.what()).find("deficit 1"), std::string::npos);
  }
}

TEST(Polyhedral, ContainsAndDimension) {
  const ConeHRep ray{2, {to_intvec({1, -1})}, {to_intvec({1, 0})}};
  EXPECT_EQ(dimension(ray), 1u);
  EXPECT_TRUE(contains(ray, IntVec(2)));
  EXPECT_TRUE(contains(ray, RatVec{Rational(1, 3), Rational(1, 3)}));
  EXPECT_FALSE(contains(ray, RatVec{Rational(-1, 3), Rational(-1, 3)}));
  EXPECT_FALSE(contains(ray, to_intvec({1, 0})));
  EXPECT_EQ(dimension(ConeHRep{3, {}, {unit(3, 0), unit(3, 1), unit(3, 2)}}), 3u);
  EXPECT_EQ(dimension(ConeHRep{2, {}, {to_intvec({1, 0}), to_intvec({-1, 0}), to_intvec({0, 1}), to_intvec({0, -1})}}),
            0u);
}

// Facets recovered from the rays (the dual cone's extreme rays) reproduce remove_redundant.
TEST(Polyhedral, RandomConesRoundTrip) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + static_cast<std::size_t>(trial % 3);
    ConeHRep h{n, {}, {}};
    IntVec sum(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) h.inequalities.push_back(unit(n, i));
    for (int k = 0; k < 6; ++k) {
      IntVec v(n);
      Integer total = 0;
      for (auto& x : v) total += (x = e(rng));
      if (total < 1) v[static_cast<std::size_t>(k) % n] += 1 - total;  // (1,...,1) stays interior
      if (!is_zero(v)) h.inequalities.push_back(primitive(v));
    }
    const auto r = remove_redundant(h);
    ASSERT_EQ(r.cone_dim, n);
    for (const auto& ray : r.vrep.rays) {
      for (const auto& a : h.inequalities) EXPECT_GE(dot(a, ray), 0);
    }
    for (const auto& f : r.facets.inequalities) {
      std::vector<IntVec> tight;
      for (const auto& ray : r.vrep.rays)
        if (dot(f, ray) == 0) tight.push_back(ray);
      EXPECT_EQ(rank(tight), n - 1);
    }
    const auto dual = dual_description(ConeHRep{n, {}, r.vrep.rays});
    std::set<IntVec> want;
    for (const auto& f : r.facets.inequalities) want.insert(primitive(f));
    EXPECT_EQ(as_set(dual.rays), want) << "trial " << trial;
  }
}

TEST(Polyhedral, BlockSymmetry) {
  const SymmetrySpec s = block_symmetry({2, 2, 3});
  const IntVec v = to_intvec({1, 0, 0, 1, 5, 6, 7, 9});
  const auto images = symmetry_images(v, s);
  EXPECT_EQ(images.size(), 2u);
  EXPECT_EQ(orbit_representative(v, s), to_intvec({0, 1, 1, 0, 5, 6, 7, 9}));
}

TEST(Polyhedral, DedupeOrbits) {
  const SymmetrySpec s = block_symmetry({2, 2});
  const auto red = dedupe_up_to_perms({to_intvec({1, 1, 1, 1}), to_intvec({2, 3, 1, 0}), to_intvec({1, 0, 2, 3})}, s);
  ASSERT_EQ(red.representatives.size(), 2u);
  EXPECT_EQ(red.orbit_of[1], red.orbit_of[2]);
  EXPECT_EQ(red.orbit_sizes[red.orbit_of[0]], 1u);
  EXPECT_EQ(red.orbit_sizes[red.orbit_of[1]], 2u);
  EXPECT_EQ(red.representatives[red.orbit_of[1]], to_intvec({1, 0, 2, 3}));
  for (std::size_t i = 0; i < red.representatives.size(); ++i)
    EXPECT_EQ(orbit_representative(red.representatives[i], s), red.representatives[i]);
}
