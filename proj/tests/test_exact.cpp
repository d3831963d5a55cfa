#include "momentcone/exact.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace momentcone;

TEST(Exact, CanonicalizeClearsDenominators) {
  EXPECT_EQ(canonicalize({Rational(1, 2), Rational(1, 2), Rational(0)}), to_intvec({1, 1, 0}));
  EXPECT_EQ(canonicalize(to_ratvec(to_intvec({-2, 4, -2}))), to_intvec({-1, 2, -1}));
}

TEST(Exact, CanonicalizeTabulatedRay) {
  RatVec v;
  for (int i = 0; i < 4; ++i) v.push_back(Rational(1, 4));
  for (auto q : {Rational(2, 5), Rational(3, 10), Rational(3, 10), Rational(0)}) v.push_back(q);
  for (auto q : {Rational(7, 10), Rational(3, 20), Rational(3, 20), Rational(0)}) v.push_back(q);
  EXPECT_EQ(canonicalize(v), to_intvec({5, 5, 5, 5, 8, 6, 6, 0, 14, 3, 3, 0}));
}

TEST(Exact, CanonicalizeRejectsZero) {
  EXPECT_THROW(canonicalize({Rational(0), Rational(0)}), std::invalid_argument);
  EXPECT_THROW(primitive(to_intvec({0, 0, 0})), std::invalid_argument);
}

TEST(Exact, RationalText) {
  EXPECT_EQ(format_rational(Rational(3)), "3/1");
  EXPECT_EQ(format_rational(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(parse_rational(" -3/2 "), Rational(-3, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/2/3", "--1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Exact, RationalTextRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Rational q(num(rng), den(rng));
    Rational c = q;
    c.canonicalize();
    EXPECT_EQ(parse_rational(format_rational(c)), c);
  }
}

TEST(Exact, RankAndNullspace) {
  const std::vector<IntVec> rows = {to_intvec({1, 2, 3}), to_intvec({2, 4, 6}), to_intvec({0, 1, 1})};
  EXPECT_EQ(rank(rows), 2u);
  const auto ns = nullspace(rows, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) EXPECT_EQ(dot(r, ns[0]), 0);
  EXPECT_EQ(rank({}), 0u);
  EXPECT_EQ(nullspace({}, 3).size(), 3u);
}

TEST(Exact, RankSurvivesLargeEntries) {
  Integer big("123456789012345678901234567890");
  const std::vector<IntVec> rows = {{big, Integer(1)}, {big * 2, Integer(2)}, {big + 1, Integer(1)}};
  EXPECT_EQ(rank(rows), 2u);
}

TEST(Exact, RandomNullspaceIsOrthogonal) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<IntVec> rows(4, IntVec(7));
    for (auto& r : rows)
      for (auto& x : r) x = entry(rng);
    const auto ns = nullspace(rows, 7);
    EXPECT_EQ(ns.size(), 7 - rank(rows));
    for (const auto& v : ns)
      for (const auto& r : rows) EXPECT_EQ(dot(r, v), 0);
    if (!ns.empty()) EXPECT_EQ(rank(ns), ns.size());
  }
}

TEST(Exact, Int64Conversion) {
  EXPECT_EQ(to_int64(Integer(-42)), -42);
  EXPECT_THROW(to_int64(Integer("100000000000000000000")), std::exception);
}
