#include "momentcone/oracle.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace momentcone {

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    visit(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

CartanElement unflatten(const GroupData& g, const IntVec& v) {
  CartanElement h;
  std::size_t pos = 0;
  for (const auto& f : g.factors()) {
    h.parts.emplace_back(v.begin() + static_cast<long>(pos), v.begin() + static_cast<long>(pos + static_cast<std::size_t>(f.rank)));
    pos += static_cast<std::size_t>(f.rank);
  }
  h.scalars.assign(v.begin() + static_cast<long>(pos), v.end());
  return h;
}

}  // namespace

std::vector<CartanElement> brute_admissible(const Representation& rep, std::size_t max_dim) {
  if (rep.dim() > max_dim)
    throw std::length_error("brute_admissible refused: " + std::to_string(rep.dim()) + " weights exceed the limit " +
                            std::to_string(max_dim));
  const GroupData& g = rep.group;
  std::size_t n = 0;
  for (const auto& f : g.factors()) n += static_cast<std::size_t>(f.rank);
  n += static_cast<std::size_t>(g.scalar_count());
  std::vector<IntVec> fixed;
  std::size_t off = 0;
  for (const auto& f : g.factors()) {
    if (f.kind == FactorKind::SU) {
      IntVec row(n, Integer(0));
      for (int i = 0; i < f.rank; ++i) row[off + static_cast<std::size_t>(i)] = 1;
      fixed.push_back(std::move(row));
    }
    off += static_cast<std::size_t>(f.rank);
  }
  std::vector<IntVec> rows;
  for (const auto& w : rep.weights) {
    IntVec row;
    for (const auto& p : w.parts) row.insert(row.end(), p.begin(), p.end());
    row.insert(row.end(), w.scalars.begin(), w.scalars.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::set<IntVec> found;
  const auto k = static_cast<std::size_t>(g.cartan_rank() - 1);
  for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& pick) {
    std::vector<IntVec> sys = fixed;
    for (std::size_t i : pick) sys.push_back(rows[i]);
    const auto ns = nullspace(sys, n);
    if (ns.size() != 1) return;
    IntVec v = primitive(ns[0]);
    found.insert(v);
    for (auto& x : v) x = -x;
    found.insert(v);
  });
  std::vector<CartanElement> out;
  for (const auto& v : found) out.push_back(unflatten(g, v));
  std::sort(out.begin(), out.end());
  return out;
}

CartanElement dominant_form(const CartanElement& h) {
  CartanElement out = h;
  for (auto& p : out.parts) std::sort(p.begin(), p.end(), std::greater<>());
  return out;
}

CartanElement unoriented_dominant(const CartanElement& h) {
  CartanElement neg = h;
  for (auto& p : neg.parts)
    for (auto& x : p) x = -x;
  for (auto& x : neg.scalars) x = -x;
  return std::min(dominant_form(h), dominant_form(neg));
}

HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

std::vector<double> descending(const Eigen::MatrixXcd& rho) {
  const auto e = hermitian_eigen(rho);
  std::vector<double> out(e.values.data(), e.values.data() + e.values.size());
  std::reverse(out.begin(), out.end());
  return out;
}

SpectraSample one_sample(int a, int b, int c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto n = static_cast<std::size_t>(a * b * c);
  std::vector<std::complex<double>> psi(n);
  double norm = 0;
  for (auto& x : psi) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    x = {re, im};
    norm += std::norm(x);
  }
  norm = std::sqrt(norm);
  for (auto& x : psi) x /= norm;
  auto at = [&](int i, int j, int k) { return psi[static_cast<std::size_t>((i * b + j) * c + k)]; };
  Eigen::MatrixXcd ra = Eigen::MatrixXcd::Zero(a, a), rb = Eigen::MatrixXcd::Zero(b, b), rc = Eigen::MatrixXcd::Zero(c, c);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < c; ++k) {
        const auto v = at(i, j, k);
        for (int i2 = 0; i2 < a; ++i2) ra(i, i2) += v * std::conj(at(i2, j, k));
        for (int j2 = 0; j2 < b; ++j2) rb(j, j2) += v * std::conj(at(i, j2, k));
        for (int k2 = 0; k2 < c; ++k2) rc(k, k2) += v * std::conj(at(i, j, k2));
      }
  return {{descending(ra), descending(rb), descending(rc)}};
}

}  // namespace

std::vector<SpectraSample> sample_spectra(int a, int b, int c, std::size_t n, std::uint64_t seed, Exec exec) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("local dimensions must be positive");
  if (n < 1) throw std::invalid_argument("need at least one sample");
  std::vector<SpectraSample> out(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
  for (long i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = one_sample(a, b, c, hash_combine(seed, static_cast<std::uint64_t>(i)));
  return out;
}

SampleCheck check_samples(const std::vector<IntVec>& normals, const std::vector<SpectraSample>& samples,
                          double tolerance, Exec exec) {
  std::vector<std::vector<double>> rows;
  for (const auto& nv : normals) {
    std::vector<double> r;
    for (const auto& x : nv) r.push_back(x.get_d());
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> bad(samples.size(), 0);
  std::vector<double> worst(samples.size(), std::numeric_limits<double>::infinity());
  const long count = static_cast<long>(samples.size());
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel)
  for (long s = 0; s < count; ++s) {
    std::vector<double> point;
    for (const auto& sp : samples[static_cast<std::size_t>(s)].spectra) point.insert(point.end(), sp.begin(), sp.end());
    for (const auto& r : rows) {
      if (r.size() != point.size()) throw std::invalid_argument("normal and spectra have different lengths");
      double v = 0;
      for (std::size_t i = 0; i < r.size(); ++i) v += r[i] * point[i];
      worst[static_cast<std::size_t>(s)] = std::min(worst[static_cast<std::size_t>(s)], v);
      if (v < -tolerance) ++bad[static_cast<std::size_t>(s)];
    }
  }
  SampleCheck out;
  out.samples = samples.size();
  out.worst = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    out.violations += bad[s];
    out.worst = std::min(out.worst, worst[s]);
  }
  if (rows.empty()) out.worst = 0;
  return out;
}

namespace {

Eigen::MatrixXcd random_unitary(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = {re, im};
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(d, d);
}

/// Closest matrix with the given spectrum: keep eigenvectors, replace eigenvalues in matching order.
Eigen::MatrixXcd project_to_orbit(const Eigen::MatrixXcd& m, const Eigen::VectorXd& ascending) {
  const auto e = hermitian_eigen(m);
  return e.vectors * ascending.cast<std::complex<double>>().asDiagonal() * e.vectors.adjoint();
}

/// Permutations p, q with x + y[p] + z[q] = 0 give commuting diagonal witnesses.
bool diagonal_witness(const std::array<Eigen::VectorXd, 3>& target, double tolerance, TripleSearch& out) {
  const auto d = static_cast<int>(target[0].size());
  if (d > 7) return false;
  std::vector<int> p(static_cast<std::size_t>(d)), q(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do {
    std::iota(q.begin(), q.end(), 0);
    do {
      double res = 0;
      for (int i = 0; i < d; ++i) {
        const double v = target[0][i] + target[1][p[static_cast<std::size_t>(i)]] + target[2][q[static_cast<std::size_t>(i)]];
        res += v * v;
      }
      if (std::sqrt(res) < tolerance) {
        Eigen::VectorXd y(d), z(d);
        for (int i = 0; i < d; ++i) {
          y[i] = target[1][p[static_cast<std::size_t>(i)]];
          z[i] = target[2][q[static_cast<std::size_t>(i)]];
        }
        out.matrices = {Eigen::MatrixXcd(target[0].cast<std::complex<double>>().asDiagonal()),
                        Eigen::MatrixXcd(y.cast<std::complex<double>>().asDiagonal()),
                        Eigen::MatrixXcd(z.cast<std::complex<double>>().asDiagonal())};
        out.residual = std::sqrt(res);
        out.found = true;
        return true;
      }
    } while (std::next_permutation(q.begin(), q.end()));
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TripleSearch random_hermitian_triple(int d, const std::array<std::vector<double>, 3>& spectra, std::size_t iters,
                                     std::uint64_t seed, double tolerance) {
  for (const auto& s : spectra)
    if (static_cast<int>(s.size()) != d) throw std::invalid_argument("spectrum length differs from d");
  std::array<Eigen::VectorXd, 3> target;
  for (std::size_t f = 0; f < 3; ++f) {
    std::vector<double> s = spectra[f];
    std::sort(s.begin(), s.end());
    target[f] = Eigen::Map<Eigen::VectorXd>(s.data(), d);
  }
  TripleSearch out;
  out.residual = std::numeric_limits<double>::infinity();
  if (diagonal_witness(target, tolerance, out)) return out;
  std::mt19937_64 rng(seed);
  const std::size_t restart = std::max<std::size_t>(iters / 4, 1);
  std::array<Eigen::MatrixXcd, 3> m;
  for (std::size_t it = 0; it < iters; ++it) {
    if (it % restart == 0)
      for (std::size_t f = 0; f < 3; ++f) {
        const auto u = random_unitary(d, rng);
        m[f] = u * target[f].cast<std::complex<double>>().asDiagonal() * u.adjoint();
      }
    const Eigen::MatrixXcd shift = (m[0] + m[1] + m[2]) / 3.0;
    for (std::size_t f = 0; f < 3; ++f) m[f] = project_to_orbit(m[f] - shift, target[f]);
    const double res = (m[0] + m[1] + m[2]).norm();
    out.iterations = it + 1;
    if (res < out.residual) {
      out.residual = res;
      out.matrices = m;
    }
    if (res < tolerance) {
      out.found = true;
      break;
    }
  }
  return out;
}

}  // namespace momentcone
