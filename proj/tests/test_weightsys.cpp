#include "momentcone/weightsys.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace momentcone;

namespace {

Permutation cycle_down(int d) {  // 1 -> d, k -> k-1
  Permutation p(static_cast<std::size_t>(d));
  p[0] = d - 1;
  for (int k = 1; k < d; ++k) p[static_cast<std::size_t>(k)] = k - 1;
  return p;
}

Permutation random_permutation(int d, std::mt19937_64& rng) {
  Permutation p = identity_permutation(d);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<Permutation> brute_shuffles(const IntVec& x, int ell) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(static_cast<int>(x.size()));
  do {
    bool ok = permutation_length(p) == ell;
    for (std::size_t i = 0; ok && i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        if (x[i] == x[j] && p[i] > p[j]) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST(WeightSys, GroupShapes) {
  const auto k2 = GroupData::kronecker(2, 2, 2);
  EXPECT_EQ(k2.cartan_rank(), 4);
  EXPECT_EQ(k2.positive_roots().size(), 3u);
  const auto k4 = GroupData::kronecker(4, 4, 4);
  EXPECT_EQ(k4.cartan_rank(), 10);
  EXPECT_EQ(k4.positive_roots().size(), 18u);
  const auto h3 = GroupData::horn(3);
  EXPECT_EQ(h3.cartan_rank(), 9);
  EXPECT_EQ(h3.positive_roots().size(), 9u);
}

TEST(WeightSys, RootsAreLexicographicAndLocal) {
  const auto g = GroupData::kronecker(3, 4, 2);
  const auto& roots = g.positive_roots();
  for (const auto& r : roots) EXPECT_LT(r.i, r.j);
  for (std::size_t k = 1; k < roots.size(); ++k) {
    const auto& p = roots[k - 1];
    const auto& q = roots[k];
    EXPECT_TRUE(std::tie(p.factor, p.i, p.j) < std::tie(q.factor, q.i, q.j));
  }
}

TEST(WeightSys, RankZeroFactorIsRejected) {
  EXPECT_THROW(GroupData::build({{FactorKind::SU, 0}}, 1), std::invalid_argument);
}

TEST(WeightSys, PairingExamples) {
  const auto g = GroupData::kronecker(4, 4, 4);
  const CartanElement h = make_cartan(g, {to_intvec({-3, 1, 1, 1}), to_intvec({-3, 1, 1, 1}), to_intvec({3, -1, -1, -1})},
                                      to_intvec({3}));
  const Rational q(1, 4);
  const DualPoint mixed = kronecker_point({{q, q, q, q}, {q, q, q, q}, {1, 0, 0, 0}});
  EXPECT_EQ(pairing(h, mixed), 6);
  const DualPoint product = kronecker_point({{1, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 0, 0}});
  EXPECT_EQ(pairing(h, product), 0);
  const CartanElement zero = make_cartan(g, {IntVec(4), IntVec(4), IntVec(4)}, IntVec(1));
  EXPECT_EQ(pairing(zero, mixed), 0);
}

TEST(WeightSys, ShapeMismatchThrows) {
  const auto g = GroupData::kronecker(2, 2, 2);
  EXPECT_THROW(make_cartan(g, {to_intvec({1, -1}), to_intvec({1, -1})}, to_intvec({0})), std::invalid_argument);
  EXPECT_THROW(make_cartan(g, {to_intvec({1, 0}), to_intvec({1, -1}), to_intvec({1, -1})}, to_intvec({0})),
               std::invalid_argument);
}

TEST(WeightSys, PairingIsBilinear) {
  const auto g = GroupData::kronecker(2, 3, 3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-4, 4);
  auto random_h = [&] {
    std::vector<IntVec> parts;
    for (int d : {2, 3, 3}) {
      IntVec p(static_cast<std::size_t>(d));
      Integer s = 0;
      for (int i = 0; i + 1 < d; ++i) s += (p[static_cast<std::size_t>(i)] = e(rng));
      p.back() = -s;
      parts.push_back(p);
    }
    return make_cartan(g, parts, {Integer(e(rng))});
  };
  auto random_point = [&] {
    std::vector<RatVec> parts;
    for (int d : {2, 3, 3}) {
      RatVec p(static_cast<std::size_t>(d), Rational(0));
      Rational s = 0;
      for (int i = 1; i < d; ++i) s += (p[static_cast<std::size_t>(i)] = Rational(e(rng) + 4) / 2);
      p[0] = 12 - s;  // all traces equal
      parts.push_back(p);
    }
    return kronecker_point(parts);
  };
  for (int t = 0; t < 20; ++t) {
    const auto h1 = random_h(), h2 = random_h();
    const auto x = random_point();
    CartanElement sum = h1;
    for (std::size_t f = 0; f < sum.parts.size(); ++f)
      for (std::size_t i = 0; i < sum.parts[f].size(); ++i) sum.parts[f][i] += h2.parts[f][i];
    sum.scalars[0] += h2.scalars[0];
    EXPECT_EQ(pairing(sum, x), pairing(h1, x) + pairing(h2, x));
  }
}

TEST(WeightSys, PairingIsWeylInvariant) {
  const auto g = GroupData::kronecker(3, 3, 4);
  std::mt19937_64 rng(5);
  const CartanElement h = make_cartan(g, {to_intvec({2, -1, -1}), to_intvec({1, 0, -1}), to_intvec({3, 1, -2, -2})},
                                      to_intvec({2}));
  const DualPoint x = kronecker_point({{Rational(1, 2), Rational(1, 3), Rational(1, 6)},
                                       {Rational(3, 4), Rational(1, 4), 0},
                                       {Rational(2, 5), Rational(2, 5), Rational(1, 5), 0}});
  for (int t = 0; t < 30; ++t) {
    WeylElement w{{random_permutation(3, rng), random_permutation(3, rng), random_permutation(4, rng)}};
    EXPECT_EQ(pairing(weyl_act(w, h), weyl_act(w, x)), pairing(h, x));
    EXPECT_EQ(weyl_act(w, weyl_act(inverse(w), h)), h);
  }
  EXPECT_EQ(weyl_act(identity_weyl(g), h), h);
}

TEST(WeightSys, PolygonalElementFromCycle) {
  for (int d = 2; d <= 5; ++d) {
    const auto g = GroupData::kronecker(d, d, d);
    IntVec ones(static_cast<std::size_t>(d), Integer(1)), minus(static_cast<std::size_t>(d), Integer(-1));
    IntVec a = ones, c = minus;
    a.back() = 1 - d;
    c.front() = d - 1;
    const CartanElement h0 = make_cartan(g, {a, a, c}, to_intvec({d - 1}));
    const Permutation w0 = longest_element(d);
    const Permutation sigma = cycle_down(d);
    WeylElement w{{w0, w0, compose(w0, sigma)}};
    IntVec pa = ones, pc = minus;
    pa.front() = 1 - d;
    pc.front() = d - 1;
    EXPECT_EQ(weyl_act(w, h0), make_cartan(g, {pa, pa, pc}, to_intvec({d - 1}))) << d;
  }
}

TEST(WeightSys, PermutationLengths) {
  EXPECT_EQ(permutation_length(identity_permutation(5)), 0);
  EXPECT_EQ(permutation_length(longest_element(4)), 6);
  for (int d = 1; d <= 7; ++d) {
    int inversions = 0;
    const Permutation s = cycle_down(d);
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) inversions += s[static_cast<std::size_t>(i)] > s[static_cast<std::size_t>(j)];
    EXPECT_EQ(permutation_length(s), d - 1);
    EXPECT_EQ(permutation_length(s), inversions);
  }
  std::mt19937_64 rng(9);
  for (int d = 1; d <= 6; ++d)
    for (int t = 0; t < 20; ++t) {
      const Permutation p = random_permutation(d, rng);
      EXPECT_EQ(permutation_length(p) + permutation_length(compose(longest_element(d), p)), d * (d - 1) / 2);
      EXPECT_EQ(compose(p, inverse(p)), identity_permutation(d));
    }
}

TEST(WeightSys, ShuffleExamples) {
  EXPECT_EQ(shuffles_of_length(to_intvec({2, 2, 2}), 0), std::vector<Permutation>{identity_permutation(3)});
  EXPECT_TRUE(shuffles_of_length(to_intvec({2, 2, 2}), 1).empty());
  EXPECT_EQ(shuffles_of_length(to_intvec({1, 0}), 1), (std::vector<Permutation>{{1, 0}}));
  auto got = shuffles_of_length(to_intvec({1, 1, 0}), 2);
  auto want = brute_shuffles(to_intvec({1, 1, 0}), 2);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
  EXPECT_EQ(got.size(), 1u);
}

TEST(WeightSys, ShufflesMatchBruteForce) {
  const std::vector<IntVec> xs = {to_intvec({0}),          to_intvec({3, 1}),        to_intvec({2, 2, 0}),
                                  to_intvec({3, 2, 1}),    to_intvec({1, 1, 0, 0}),  to_intvec({4, 2, 2, -1}),
                                  to_intvec({1, 1, 1, 0, 0}), to_intvec({5, 3, 3, 3, 0}), to_intvec({4, 3, 2, 1, 0})};
  for (const auto& x : xs) {
    const int d = static_cast<int>(x.size());
    std::size_t total = 0;
    for (int ell = 0; ell <= d * (d - 1) / 2; ++ell) {
      auto got = shuffles_of_length(x, ell);
      const auto first = got;
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, brute_shuffles(x, ell)) << to_string(x) << " length " << ell;
      EXPECT_EQ(shuffles_of_length(x, ell), first);
      total += got.size();
    }
    // multinomial d! / prod m_i!
    std::map<Integer, int> mult;
    for (const auto& v : x) ++mult[v];
    std::size_t expected = 1;
    for (int i = 2; i <= d; ++i) expected *= static_cast<std::size_t>(i);
    for (const auto& [v, m] : mult)
      for (int i = 2; i <= m; ++i) expected /= static_cast<std::size_t>(i);
    EXPECT_EQ(total, expected) << to_string(x);
    EXPECT_EQ(all_shuffles(x).size(), expected);
  }
}
