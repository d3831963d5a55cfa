#include "momentcone/horncone.hpp"
#include "momentcone/oracle.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace momentcone;

namespace {

SubsetTriple triple(int d, std::vector<int> i, std::vector<int> j, std::vector<int> k) {
  SubsetTriple t{d, static_cast<int>(i.size()), {std::move(i), std::move(j), std::move(k)}};
  validate(t);
  return t;
}

std::vector<SubsetTriple> all_triples(int d, int r) {
  std::vector<SubsetTriple> out;
  const auto subsets = subsets_of_size(d, r);
  for (const auto& i : subsets)
    for (const auto& j : subsets)
      for (const auto& k : subsets) out.push_back(SubsetTriple{d, r, {i, j, k}});
  return out;
}

RatVec rats(std::initializer_list<Rational> v) { return RatVec(v); }

IntVec ints(std::initializer_list<long long> v) { return to_intvec(std::vector<long long>(v)); }

bool is_member(const SubsetTriple& t) {
  const auto& set = horn_sets(t.d, t.r);
  return std::binary_search(set.begin(), set.end(), t);
}

}  // namespace

TEST(Horn, SubsetPartitions) {
  EXPECT_EQ(subset_partition({1, 3, 5}, 6), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(subset_partition({2, 4, 6}, 6), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(subset_partition({1, 2, 3}, 7), (std::vector<int>{4, 4, 4}));
  EXPECT_EQ(subset_partition({5, 6, 7}, 7), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(complement({1, 3, 5}, 6), (std::vector<int>{2, 4, 6}));
}

TEST(Horn, TraceExamples) {
  EXPECT_TRUE(horn_trace(triple(6, {1, 3, 5}, {1, 3, 5}, {1, 3, 5})));
  EXPECT_TRUE(horn_trace(triple(2, {1}, {1}, {2})));
  EXPECT_FALSE(horn_trace(triple(2, {1}, {1}, {1})));
}

TEST(Horn, ParseAndValidate) {
  const auto t = parse_subset_triple("{1,3,5};{1,3,5};{1,3,5}", 6);
  EXPECT_EQ(t, triple(6, {1, 3, 5}, {1, 3, 5}, {1, 3, 5}));
  EXPECT_EQ(to_string(t), "{1,3,5};{1,3,5};{1,3,5}");
  for (const char* bad : {"{1,3};{1,3}", "{1,7};{1,2};{1,2}", "{2,1};{1,2};{1,2}", "{1,2};{1};{1,2}", "{1,1};{1,2};{1,2}",
                          "1,2;1,2;x", "{1,2,3};{1,2,3};{1,2,3}"})
    EXPECT_THROW(parse_subset_triple(bad, 3), std::invalid_argument) << bad;
  EXPECT_THROW(horn_sets(3, 3), std::invalid_argument);
  EXPECT_THROW(horn_sets(3, 0), std::invalid_argument);
}

TEST(Horn, SmallSets) {
  const auto& h21 = horn_sets(2, 1);
  std::vector<SubsetTriple> brute;
  for (const auto& t : all_triples(2, 1))
    if (t.sets[0][0] + t.sets[1][0] + t.sets[2][0] == 4) brute.push_back(t);
  EXPECT_EQ(h21, brute);
  EXPECT_EQ(h21, (std::vector<SubsetTriple>{triple(2, {1}, {1}, {2}), triple(2, {1}, {2}, {1}), triple(2, {2}, {1}, {1})}));
  EXPECT_EQ(horn_sets(3, 1).size(), 6u);
  std::size_t trace31 = 0;
  for (const auto& t : all_triples(3, 1)) trace31 += t.sets[0][0] + t.sets[1][0] + t.sets[2][0] == 5;
  EXPECT_EQ(trace31, 6u);
  EXPECT_TRUE(is_member(triple(6, {1, 3, 5}, {1, 3, 5}, {1, 3, 5})));
}

TEST(Horn, SetSizes) {
  const std::map<std::pair<int, int>, std::size_t> sizes = {{{3, 2}, 6},  {{4, 1}, 10}, {{4, 2}, 21}, {{4, 3}, 10},
                                                            {{5, 1}, 15}, {{5, 2}, 56}, {{5, 3}, 56}, {{5, 4}, 15}};
  for (const auto& [dr, n] : sizes) EXPECT_EQ(horn_sets(dr.first, dr.second).size(), n) << dr.first << "," << dr.second;
}

TEST(Horn, ConditionMatchesRecursionUpTo5) {
  for (int d = 2; d <= 5; ++d)
    for (int r = 1; r < d; ++r) {
      std::vector<SubsetTriple> by_condition, by_dual;
      for (const auto& t : all_triples(d, r)) {
        if (!horn_trace(t)) continue;
        if (horn_condition(t)) by_condition.push_back(t);
        if (horn_dual_condition(t)) by_dual.push_back(t);
      }
      EXPECT_EQ(by_condition, horn_sets(d, r)) << d << "," << r;
      EXPECT_EQ(by_dual, horn_sets(d, r)) << d << "," << r;
    }
}

TEST(Horn, TangentDeterminantMatchesRecursionUpTo4) {
  std::size_t zero_checked = 0;
  for (int d = 2; d <= 4; ++d)
    for (int r = 1; r < d; ++r)
      for (const auto& t : all_triples(d, r)) {
        if (!horn_trace(t)) continue;
        const auto m = horn_tangent_matrix(t);
        EXPECT_EQ(m.size(), static_cast<std::size_t>(2 * r * (d - r)));
        const bool pit = horn_tangent_det(t, 2, 0).nonzero();
        EXPECT_EQ(pit, is_member(t)) << to_string(t);
        if (!pit) {
          EXPECT_TRUE(det_symbolic(m).is_zero()) << to_string(t);
          ++zero_checked;
        }
      }
  EXPECT_GT(zero_checked, 0u);
}

TEST(Horn, SmallestTangentDeterminants) {
  for (const auto& t : horn_sets(2, 1)) {
    const auto m = horn_tangent_matrix(t);
    ASSERT_EQ(m.size(), 2u);
    EXPECT_FALSE(det_symbolic(m).is_zero());
  }
}

TEST(Horn, MembersOfHorn63AreCertified) {
  for (const auto& t : horn_sets(6, 3)) EXPECT_TRUE(horn_tangent_det(t, 2, 0).nonzero()) << to_string(t);
}

TEST(Horn, NonMemberAt42IsZero) {
  std::size_t seen = 0;
  for (const auto& t : all_triples(4, 2)) {
    if (!horn_trace(t) || is_member(t)) continue;
    const auto v = horn_tangent_det(t, 2, 1);
    EXPECT_FALSE(v.nonzero());
    EXPECT_GT(v.failure_bound, 0);
    ++seen;
  }
  EXPECT_EQ(seen, 6u);
}

TEST(Horn, KappaOfAlternatingTriple) {
  const auto t = triple(6, {1, 3, 5}, {1, 3, 5}, {1, 3, 5});
  const WeightVector k = kappa_ijk(t);
  EXPECT_EQ(k.parts, (std::vector<IntVec>{ints({3, 2, 1}), ints({3, 2, 1}), ints({-3, -4, -5}), ints({2, 1, 0}),
                                          ints({2, 1, 0}), ints({-1, -2, -3})}));
  EXPECT_TRUE(horn_condition(t));
  // the negated first block is the printed lowest weight
  const std::vector<IntVec> printed = {ints({-3, -2, -1}), ints({-3, -2, -1}), ints({3, 4, 5})};
  for (std::size_t f = 0; f < 3; ++f) {
    IntVec neg;
    for (const auto& x : k.parts[f]) neg.push_back(-x);
    EXPECT_EQ(neg, printed[f]);
  }
  const auto rep = horn_rep(6);
  EXPECT_EQ(restrict_to_blocks(t, kappa(rep, horn_cartan(t))).parts, k.parts);
}

TEST(Horn, KappaOfSegments) {
  for (int d = 3; d <= 5; ++d)
    for (int r = 1; r < d; ++r) {
      std::vector<int> first(static_cast<std::size_t>(r)), last(static_cast<std::size_t>(r));
      std::iota(first.begin(), first.end(), 1);
      std::iota(last.begin(), last.end(), d - r + 1);
      const SubsetTriple initial{d, r, {first, first, first}};
      EXPECT_FALSE(horn_trace(initial));
      const auto k = kappa_ijk(initial);
      EXPECT_EQ(k.parts[0], IntVec(static_cast<std::size_t>(r), Integer(d - r)));
      EXPECT_EQ(k.parts[2], IntVec(static_cast<std::size_t>(r), Integer(-(d - r))));
      // a final segment has the zero partition
      const SubsetTriple mixed{d, r, {first, first, last}};
      EXPECT_TRUE(horn_trace(mixed));
      const auto f = kappa_ijk(mixed);
      EXPECT_EQ(f.parts[1], IntVec(static_cast<std::size_t>(r), Integer(d - r)));
      EXPECT_EQ(f.parts[2], IntVec(static_cast<std::size_t>(r), Integer(-2 * (d - r))));
    }
}

TEST(Horn, KappaAgreesWithTheGeneralFormula) {
  std::size_t checked = 0;
  for (int d = 2; d <= 4; ++d) {
    const auto rep = horn_rep(d);
    for (int r = 1; r < d; ++r)
      for (const auto& t : horn_sets(d, r)) {
        EXPECT_EQ(restrict_to_blocks(t, kappa(rep, horn_cartan(t))).parts, kappa_ijk(t).parts) << to_string(t);
        ++checked;
      }
  }
  EXPECT_EQ(checked, 3u + 6u + 6u + 10u + 21u + 10u);
}

TEST(Horn, MembershipExamples) {
  EXPECT_TRUE(horn_membership({rats({1, 0}), rats({1, 0}), rats({-1, -1})}).member);
  EXPECT_TRUE(horn_membership({rats({1, 0}), rats({1, 0}), rats({0, -2})}).member);
  EXPECT_TRUE(horn_membership({rats({0, 0, 0}), rats({0, 0, 0}), rats({0, 0, 0})}).member);
  const auto trace = horn_membership({rats({1, 0}), rats({0, 0}), rats({0, -2})});
  EXPECT_FALSE(trace.member);
  EXPECT_NE(trace.reason.find("trace"), std::string::npos);
  const auto order = horn_membership({rats({0, 1}), rats({1, 0}), rats({-1, -1})});
  EXPECT_FALSE(order.member);
  EXPECT_NE(order.reason.find("non-increasing"), std::string::npos);
  const auto sign = horn_membership({rats({1, -1}), rats({1, 0}), rats({0, -1})});
  EXPECT_FALSE(sign.member);
  // x2 + y1 + z1 < 0
  const HornPoint p{rats({2, 0}), rats({1, 0}), rats({Rational(-3, 2), Rational(-3, 2)})};
  const auto ineq = horn_membership(p);
  EXPECT_FALSE(ineq.member);
  ASSERT_TRUE(ineq.violated.has_value());
  EXPECT_EQ(*ineq.violated, triple(2, {2}, {1}, {1}));
  EXPECT_EQ(horn_form(*ineq.violated, p), Rational(-1, 2));
}

TEST(Horn, MembershipIsSymmetricInXY) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 2 + trial % 4;
    RatVec x(static_cast<std::size_t>(d)), y(static_cast<std::size_t>(d)), z(static_cast<std::size_t>(d));
    for (auto* v : {&x, &y, &z})
      for (auto& q : *v) q = e(rng);
    for (auto* v : {&x, &y}) std::sort(v->rbegin(), v->rend());
    Rational s = 0;
    for (const auto* v : {&x, &y})
      for (const auto& q : *v) s += q;
    Rational zs = 0;
    for (auto& q : z) zs += q;
    for (auto& q : z) q = zs == 0 ? Rational(-s / d) : Rational(-q * s / zs);
    std::sort(z.rbegin(), z.rend());
    EXPECT_EQ(horn_membership({x, y, z}).member, horn_membership({y, x, z}).member);
  }
}

TEST(Horn, RandomHermitianSpectraSatisfyEveryInequality) {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> g;
  for (int d = 2; d <= 5; ++d)
    for (int trial = 0; trial < 200; ++trial) {
      auto psd = [&] {
        Eigen::MatrixXcd m(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) m(i, j) = {g(rng), g(rng)};
        return Eigen::MatrixXcd(m * m.adjoint());
      };
      const Eigen::MatrixXcd x = psd(), y = psd();
      const Eigen::MatrixXcd z = -(x + y);
      std::array<Eigen::VectorXd, 3> spec;
      int f = 0;
      for (const auto* m : {&x, &y, &z}) spec[static_cast<std::size_t>(f++)] = hermitian_eigen(*m).values.reverse();
      for (int r = 1; r < d; ++r)
        for (const auto& t : horn_sets(d, r)) {
          double s = 0;
          for (std::size_t k = 0; k < 3; ++k)
            for (int i : t.sets[k]) s += spec[k](i - 1);
          EXPECT_GE(s, -1e-9) << to_string(t);
        }
    }
}

TEST(Horn, IntegerDiagonalPointsAreMembers) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 2 + trial % 4;
    std::vector<int> a(static_cast<std::size_t>(d)), b(static_cast<std::size_t>(d));
    for (auto& v : a) v = e(rng);
    for (auto& v : b) v = e(rng);
    RatVec x, y, z;
    for (int i = 0; i < d; ++i) {
      x.emplace_back(a[static_cast<std::size_t>(i)]);
      y.emplace_back(b[static_cast<std::size_t>(i)]);
      z.emplace_back(-a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]);
    }
    for (auto* v : {&x, &y, &z}) std::sort(v->rbegin(), v->rend());
    EXPECT_TRUE(horn_membership({x, y, z}).member);
  }
}
