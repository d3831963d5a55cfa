#include "momentcone/ressayre.hpp"

#include "momentcone/candidates.hpp"
#include "momentcone/parallel.hpp"

#include <algorithm>
#include <random>

namespace momentcone {

TangentMatrix tangent_matrix(const Representation& rep, const CartanElement& h) {
  const HSplit s = split(rep, h);
  if (s.neg.size() != s.neg_roots.size())
    throw TraceViolation("trace condition fails: dim H(H<0) = " + std::to_string(s.neg.size()) +
                         ", dim n_-(H<0) = " + std::to_string(s.neg_roots.size()));
  TangentMatrix m;
  m.rows = s.neg;
  m.cols = s.neg_roots;
  m.vars = s.zero;
  const std::size_t k = m.rows.size();
  m.entries.assign(k, std::vector<LinearForm>(k));
  std::vector<int> row_of(rep.dim(), -1);
  std::vector<bool> in_zero(rep.dim(), false);
  for (std::size_t i = 0; i < k; ++i) row_of[static_cast<std::size_t>(m.rows[i])] = static_cast<int>(i);
  for (int v : s.zero) in_zero[static_cast<std::size_t>(v)] = true;
  for (std::size_t c = 0; c < k; ++c)
    for (const auto& t : rep.lowering[static_cast<std::size_t>(m.cols[c])]) {
      if (!in_zero[static_cast<std::size_t>(t.source)]) continue;
      const int r = row_of[static_cast<std::size_t>(t.target)];
      if (r < 0) throw std::logic_error("lowering image of a zero-part vector left H(H<0)");
      add_term(m.entries[static_cast<std::size_t>(r)][c], t.source, t.coeff);
    }
  return m;
}

TangentMatrix make_square(std::vector<std::vector<LinearForm>> entries, std::vector<int> vars) {
  TangentMatrix m;
  const std::size_t k = entries.size();
  for (const auto& row : entries)
    if (row.size() != k) throw TraceViolation("matrix is not square");
  for (std::size_t i = 0; i < k; ++i) {
    m.rows.push_back(static_cast<int>(i));
    m.cols.push_back(static_cast<int>(i));
  }
  m.vars = std::move(vars);
  m.entries = std::move(entries);
  return m;
}

std::size_t variable_bound(const TangentMatrix& m) {
  int top = -1;
  for (int v : m.vars) top = std::max(top, v);
  for (const auto& row : m.entries)
    for (const auto& f : row)
      for (const auto& [v, c] : f) top = std::max(top, v);
  return static_cast<std::size_t>(top + 1);
}

std::uint64_t det_at(const TangentMatrix& m, const std::vector<std::uint64_t>& values) {
  const std::size_t k = m.size();
  std::vector<std::vector<std::uint64_t>> num(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t acc = 0;
      for (const auto& [v, c] : m.entries[i][j])
        acc = modp::add(acc, modp::mul(modp::from_signed(c), values[static_cast<std::size_t>(v)]));
      num[i][j] = acc;
    }
  return modp::det(std::move(num));
}

PitVerdict det_nonzero_pit(const TangentMatrix& m, int trials, std::uint64_t seed) {
  PitVerdict v;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, modp::kPrime - 1);
  std::vector<std::uint64_t> values(variable_bound(m), 0);
  const int t = std::max(trials, 1);
  for (int i = 0; i < t; ++i) {
    for (auto& x : values) x = dist(rng);
    ++v.trials_used;
    if (det_at(m, values) != 0) {
      v.outcome = PitVerdict::Outcome::NonzeroCertified;
      v.failure_bound = 0;
      return v;
    }
  }
  v.outcome = PitVerdict::Outcome::ZeroProbable;
  Rational single(Integer(static_cast<unsigned long>(m.size())), Integer(static_cast<unsigned long>(modp::kPrime)));
  single.canonicalize();
  Rational bound = 1;
  for (int i = 0; i < v.trials_used; ++i) bound *= single;
  v.failure_bound = bound;
  return v;
}

Polynomial det_symbolic(const TangentMatrix& m, std::size_t cap) {
  const std::size_t k = m.size();
  if (k > cap) throw SizeLimit("symbolic determinant refused: size " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  if (k == 0) return Polynomial::constant(1);
  std::vector<std::vector<Polynomial>> entry(k, std::vector<Polynomial>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) entry[i][j] = Polynomial::from_linear(m.entries[i][j]);
  const std::size_t full = std::size_t(1) << k;
  std::vector<Polynomial> dp(full);
  std::vector<bool> live(full, false);
  dp[0] = Polynomial::constant(1);
  live[0] = true;
  for (std::size_t row = 0; row < k; ++row) {
    std::vector<Polynomial> next(full);
    std::vector<bool> next_live(full, false);
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (!live[mask] || static_cast<std::size_t>(__builtin_popcountll(mask)) != row) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (mask >> c & 1 || entry[row][c].is_zero()) continue;
        const int above = __builtin_popcountll(mask >> (c + 1));
        Polynomial term = dp[mask] * entry[row][c];
        if (above & 1) term = -term;
        next[mask | (std::size_t(1) << c)] += term;
        next_live[mask | (std::size_t(1) << c)] = true;
      }
    }
    dp = std::move(next);
    live = std::move(next_live);
  }
  return dp[full - 1];
}

WeightVector kappa(const Representation& rep, const CartanElement& h) {
  const HSplit s = split(rep, h);
  if (s.neg.size() != s.neg_roots.size()) throw TraceViolation("kappa needs the trace condition");
  WeightVector k;
  for (const auto& f : rep.group.factors()) k.parts.emplace_back(static_cast<std::size_t>(f.rank), Integer(0));
  k.scalars.assign(static_cast<std::size_t>(rep.group.scalar_count()), Integer(0));
  auto accumulate = [&](const WeightVector& w, int sign) {
    for (std::size_t f = 0; f < k.parts.size(); ++f)
      for (std::size_t i = 0; i < k.parts[f].size(); ++i) k.parts[f][i] += sign * w.parts[f][i];
    for (std::size_t i = 0; i < k.scalars.size(); ++i) k.scalars[i] += sign * w.scalars[i];
  };
  for (int v : s.neg) accumulate(rep.weights[static_cast<std::size_t>(v)], 1);
  for (int r : s.neg_roots) accumulate(rep.negative_root_weight(static_cast<std::size_t>(r)), -1);
  return k;
}

bool trace_condition(const Representation& rep, const CartanElement& h) {
  const HSplit s = split(rep, h);
  return s.neg.size() == s.neg_roots.size();
}

std::uint64_t candidate_seed(std::uint64_t global_seed, const CartanElement& h) {
  return hash_combine(global_seed, hash_string(to_string(h.flatten())));
}

DeterminantDecision decide_determinant(const Representation& rep, const CartanElement& h, const RessayrePolicy& policy) {
  DeterminantDecision d;
  const TangentMatrix m = tangent_matrix(rep, h);
  d.pit = det_nonzero_pit(m, policy.trials, candidate_seed(policy.seed, h));
  d.nonzero = d.pit.nonzero();
  if (!d.nonzero && policy.exact && m.size() <= policy.symbolic_cap) {
    d.symbolic_checked = true;
    d.nonzero = !det_symbolic(m, policy.symbolic_cap).is_zero();
  }
  return d;
}

bool is_ressayre(const Representation& rep, const CartanElement& h, const RessayrePolicy& policy) {
  if (h.is_zero() || !is_admissible(rep, h) || !trace_condition(rep, h)) return false;
  return decide_determinant(rep, h, policy).nonzero;
}

IntVec ambient_normal(const GroupData& g, const CartanElement& h) {
  if (g.scalar_count() > 1) throw std::invalid_argument("ambient_normal supports at most one scalar factor");
  IntVec out;
  for (const auto& p : h.parts) out.insert(out.end(), p.begin(), p.end());
  if (g.scalar_count() == 1) {
    const auto last = static_cast<std::size_t>(g.factors().back().rank);
    for (std::size_t i = out.size() - last; i < out.size(); ++i) out[i] += h.scalars[0];
  }
  return out;
}

std::vector<CartanElement> weyl_chamber_inequalities(const GroupData& g) {
  std::vector<CartanElement> out;
  for (std::size_t f = 0; f < g.factors().size(); ++f) {
    const int d = g.factors()[f].rank;
    for (int i = 0; i + 1 < d; ++i) {
      CartanElement h;
      for (const auto& fac : g.factors()) h.parts.emplace_back(static_cast<std::size_t>(fac.rank), Integer(0));
      h.scalars.assign(static_cast<std::size_t>(g.scalar_count()), Integer(0));
      h.parts[f][static_cast<std::size_t>(i)] = 1;
      h.parts[f][static_cast<std::size_t>(i + 1)] = -1;
      out.push_back(std::move(h));
    }
  }
  return out;
}

LabeledHRep compute_hrep(const Representation& rep, const std::vector<CartanElement>& ressayre) {
  const GroupData& g = rep.group;
  LabeledHRep out;
  std::size_t n = 0;
  std::vector<std::size_t> offset;
  for (const auto& f : g.factors()) {
    offset.push_back(n);
    n += static_cast<std::size_t>(f.rank);
  }
  out.cone.dim = n;
  for (std::size_t f = 1; f < g.factors().size(); ++f) {
    IntVec row(n, Integer(0));
    for (int i = 0; i < g.factors()[0].rank; ++i) row[offset[0] + static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < g.factors()[f].rank; ++i) row[offset[f] + static_cast<std::size_t>(i)] = -1;
    out.cone.equalities.push_back(std::move(row));
  }
  out.labels = weyl_chamber_inequalities(g);
  out.trivial_count = out.labels.size();
  out.labels.insert(out.labels.end(), ressayre.begin(), ressayre.end());
  for (const auto& h : out.labels) out.cone.inequalities.push_back(ambient_normal(g, h));
  return out;
}

}  // namespace momentcone
