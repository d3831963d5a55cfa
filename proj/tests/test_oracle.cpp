#include "momentcone/candidates.hpp"
#include "momentcone/kronecker.hpp"
#include "momentcone/oracle.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace momentcone;

namespace {

bool has_nonzero_triple(const CartanElement& h) {
  for (const auto& p : h.parts)
    if (!is_zero(p)) return true;
  return false;
}

std::set<CartanElement> pipeline_admissible(int a, int b, int c) {
  const auto rep = kronecker_rep(a, b, c);
  const auto adm = admissible_candidates(rep, tripartite_candidates(a, b, c));
  return {adm.elements.begin(), adm.elements.end()};
}

Eigen::MatrixXcd random_hermitian(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = {g(rng), g(rng)};
  return (m + m.adjoint()) / 2.0;
}

}  // namespace

TEST(Oracle, BruteAdmissibleMatchesPipeline) {
  for (const auto& [a, b, c] : std::vector<std::array<int, 3>>{{2, 2, 2}, {2, 2, 3}, {2, 2, 4}}) {
    const auto rep = kronecker_rep(a, b, c);
    const auto brute = brute_admissible(rep);
    std::set<CartanElement> dominant, classes;
    for (const auto& h : brute) {
      EXPECT_TRUE(is_admissible(rep, h));
      EXPECT_EQ(canonical(h), h);
      if (!has_nonzero_triple(h)) continue;
      classes.insert(unoriented_dominant(h));
      if (is_dominant(h)) dominant.insert(h);
    }
    const auto pipeline = pipeline_admissible(a, b, c);
    EXPECT_EQ(dominant, pipeline) << a << b << c;
    std::set<CartanElement> pipeline_classes;
    for (const auto& h : pipeline) pipeline_classes.insert(unoriented_dominant(h));
    EXPECT_EQ(classes, pipeline_classes);
  }
}

TEST(Oracle, BruteAdmissibleUpToPermutations222) {
  const auto rep = kronecker_rep(2, 2, 2);
  std::vector<CartanElement> dominant;
  for (const auto& h : brute_admissible(rep))
    if (has_nonzero_triple(h) && is_dominant(h)) dominant.push_back(h);
  EXPECT_EQ(dominant.size(), 11u);
  EXPECT_EQ(count_up_to_perms(dominant, kronecker_symmetry(2, 2, 2)), 5u);
}

TEST(Oracle, BruteAdmissibleContainsBothPolygonShifts) {
  const auto rep = kronecker_rep(2, 2, 2);
  const auto brute = brute_admissible(rep);
  const std::set<CartanElement> all(brute.begin(), brute.end());
  for (long z : {-1L, 1L}) {
    const auto h = make_cartan(rep.group, {to_intvec({1, -1}), to_intvec({1, -1}), to_intvec({1, -1})}, {Integer(z)});
    EXPECT_TRUE(all.count(h)) << z;
    CartanElement neg = h;
    for (auto& p : neg.parts)
      for (auto& x : p) x = -x;
    neg.scalars[0] = -neg.scalars[0];
    EXPECT_TRUE(all.count(neg)) << z;
  }
}

TEST(Oracle, BruteAdmissibleRefusesLargeInputs) {
  EXPECT_THROW(brute_admissible(kronecker_rep(2, 3, 3)), std::length_error);
}

TEST(Oracle, DominantForms) {
  const auto g = GroupData::kronecker(2, 2, 2);
  const auto h = make_cartan(g, {to_intvec({-1, 1}), to_intvec({1, -1}), to_intvec({0, 0})}, {Integer(2)});
  EXPECT_EQ(dominant_form(h), make_cartan(g, {to_intvec({1, -1}), to_intvec({1, -1}), to_intvec({0, 0})}, {Integer(2)}));
  CartanElement neg = h;
  for (auto& p : neg.parts)
    for (auto& x : p) x = -x;
  neg.scalars[0] = -2;
  EXPECT_EQ(unoriented_dominant(h), unoriented_dominant(neg));
}

TEST(Oracle, EigenReconstruction) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::MatrixXcd m = random_hermitian(4, rng);
    const auto e = hermitian_eigen(m);
    const Eigen::MatrixXcd back = e.vectors * e.values.cast<std::complex<double>>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LE((back - m).cwiseAbs().maxCoeff(), 1e-12);
    for (int i = 1; i < 4; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
  }
}

TEST(Oracle, TrivialFactorsArePure) {
  for (const auto& s : sample_spectra(1, 1, 1, 20, 3))
    for (const auto& v : s.spectra) {
      ASSERT_EQ(v.size(), 1u);
      EXPECT_NEAR(v[0], 1.0, 1e-12);
    }
}

TEST(Oracle, SpectraAreNormalized) {
  const auto samples = sample_spectra(2, 3, 4, 500, 5);
  ASSERT_EQ(samples.size(), 500u);
  for (const auto& s : samples) {
    for (const auto& v : s.spectra) {
      double total = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_GE(v[i], -1e-12);
        EXPECT_LE(v[i], 1 + 1e-12);
        if (i > 0) EXPECT_LE(v[i], v[i - 1]);
        total += v[i];
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
    // pure global state: the nonzero spectra of A and BC agree, so rank(A) <= bc
    EXPECT_EQ(s.spectra[0].size(), 2u);
    EXPECT_EQ(s.spectra[2].size(), 4u);
  }
}

TEST(Oracle, SamplingIsDeterministicAndScheduleFree) {
  const auto a = sample_spectra(3, 3, 3, 200, 8, Exec::Serial);
  const auto b = sample_spectra(3, 3, 3, 200, 8, Exec::Parallel);
  const auto c = sample_spectra(3, 3, 3, 100, 8, Exec::Parallel);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].spectra, b[i].spectra);
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(a[i].spectra, c[i].spectra);
  const auto other = sample_spectra(3, 3, 3, 1, 9);
  EXPECT_NE(other[0].spectra, a[0].spectra);
}

TEST(Oracle, SamplesSatisfyFacets222) {
  const auto k = compute_kronecker(2, 2, 2);
  const auto check = check_samples(k.hrep.inequalities, sample_spectra(2, 2, 2, 10000, 0));
  EXPECT_EQ(check.samples, 10000u);
  EXPECT_EQ(check.violations, 0u);
  EXPECT_GE(check.worst, -1e-9);
}

TEST(Oracle, CheckSamplesFlagsViolations) {
  const auto samples = sample_spectra(2, 2, 2, 50, 1);
  // lambda_A,2 - lambda_A,1 >= 0 fails for every generic sample
  const auto check = check_samples({to_intvec({-1, 1, 0, 0, 0, 0})}, samples);
  EXPECT_EQ(check.violations, 50u);
  EXPECT_LT(check.worst, 0);
  EXPECT_EQ(check_samples({}, samples).worst, 0);
}

TEST(Oracle, TripleSearchExamples) {
  const auto found = random_hermitian_triple(2, {{{1, 0}, {1, 0}, {-1, -1}}}, 2000, 0);
  EXPECT_TRUE(found.found);
  const Eigen::MatrixXcd sum = found.matrices[0] + found.matrices[1] + found.matrices[2];
  EXPECT_LE(sum.cwiseAbs().maxCoeff(), 1e-9);
  for (std::size_t k = 0; k < 3; ++k) {
    const Eigen::VectorXd ev = hermitian_eigen(found.matrices[k]).values;
    const std::vector<double> want = k < 2 ? std::vector<double>{0, 1} : std::vector<double>{-1, -1};
    for (int i = 0; i < 2; ++i) EXPECT_NEAR(ev(i), want[static_cast<std::size_t>(i)], 1e-9);
  }
  EXPECT_TRUE(random_hermitian_triple(3, {{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}}, 100, 0).found);
  EXPECT_TRUE(random_hermitian_triple(2, {{{1, 0}, {1, 0}, {0, -2}}}, 2000, 0).found);
  EXPECT_TRUE(random_hermitian_triple(3, {{{3, 2, 1}, {3, 2, 1}, {-3, -4, -5}}}, 4000, 0).found);
}

TEST(Oracle, TripleSearchOnRejectedPoints) {
  EXPECT_FALSE(random_hermitian_triple(2, {{{1, 0}, {0, 0}, {-0.5, -0.5}}}, 2000, 0).found);
  const auto outside = random_hermitian_triple(2, {{{2, 0}, {1, 0}, {-1.5, -1.5}}}, 2000, 0);
  EXPECT_FALSE(outside.found);
  EXPECT_GT(outside.residual, 1e-6);
}

TEST(Oracle, TripleSearchFindsRotatedInstances) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2 + trial % 2;
    const Eigen::MatrixXcd a = random_hermitian(d, rng), b = random_hermitian(d, rng);
    std::array<std::vector<double>, 3> spec;
    int f = 0;
    for (const Eigen::MatrixXcd& m : {a, b, Eigen::MatrixXcd(-(a + b))}) {
      const Eigen::VectorXd v = hermitian_eigen(m).values;
      spec[static_cast<std::size_t>(f++)] = std::vector<double>(v.data(), v.data() + v.size());
    }
    EXPECT_TRUE(random_hermitian_triple(d, spec, 20000, static_cast<std::uint64_t>(trial), 1e-7).found) << trial;
  }
}
