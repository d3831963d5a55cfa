#include "momentcone/weightsys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace momentcone {

GroupData GroupData::build(std::vector<Factor> factors, int scalar_count) {
  if (scalar_count < 0) throw std::invalid_argument("negative scalar count");
  GroupData g;
  g.factors_ = std::move(factors);
  g.scalar_count_ = scalar_count;
  g.cartan_rank_ = scalar_count;
  for (std::size_t f = 0; f < g.factors_.size(); ++f) {
    const auto& fac = g.factors_[f];
    if (fac.rank < 1) throw std::invalid_argument("factor rank must be at least 1");
    g.cartan_rank_ += fac.kind == FactorKind::SU ? fac.rank - 1 : fac.rank;
    for (int i = 0; i < fac.rank; ++i)
      for (int j = i + 1; j < fac.rank; ++j) g.roots_.push_back({static_cast<int>(f), i, j});
  }
  return g;
}

GroupData GroupData::kronecker(int a, int b, int c) {
  return build({{FactorKind::SU, a}, {FactorKind::SU, b}, {FactorKind::SU, c}}, 1);
}

GroupData GroupData::horn(int d) {
  return build({{FactorKind::U, d}, {FactorKind::U, d}, {FactorKind::U, d}}, 0);
}

bool GroupData::operator==(const GroupData& o) const {
  if (factors_.size() != o.factors_.size() || scalar_count_ != o.scalar_count_) return false;
  for (std::size_t f = 0; f < factors_.size(); ++f)
    if (factors_[f].kind != o.factors_[f].kind || factors_[f].rank != o.factors_[f].rank) return false;
  return true;
}

IntVec CartanElement::flatten() const {
  IntVec out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  out.insert(out.end(), scalars.begin(), scalars.end());
  return out;
}

bool CartanElement::is_zero() const { return momentcone::is_zero(flatten()); }

bool CartanElement::operator<(const CartanElement& o) const { return flatten() < o.flatten(); }

CartanElement make_cartan(const GroupData& g, std::vector<IntVec> parts, IntVec scalars) {
  CartanElement h{std::move(parts), std::move(scalars)};
  validate(g, h);
  return h;
}

void validate(const GroupData& g, const CartanElement& h) {
  if (h.parts.size() != g.factors().size() || h.scalars.size() != static_cast<std::size_t>(g.scalar_count()))
    throw std::invalid_argument("Cartan element does not match group shape");
  for (std::size_t f = 0; f < h.parts.size(); ++f) {
    const auto& fac = g.factors()[f];
    if (h.parts[f].size() != static_cast<std::size_t>(fac.rank))
      throw std::invalid_argument("Cartan component has wrong length");
    if (fac.kind == FactorKind::SU) {
      Integer s = 0;
      for (const auto& x : h.parts[f]) s += x;
      if (s != 0) throw std::invalid_argument("SU component is not traceless");
    }
  }
}

CartanElement canonical(const CartanElement& h) {
  Integer g = gcd_of(h.flatten());
  if (g == 0) throw std::invalid_argument("zero Cartan element");
  CartanElement out = h;
  for (auto& p : out.parts)
    for (auto& x : p) x /= g;
  for (auto& x : out.scalars) x /= g;
  return out;
}

DualPoint kronecker_point(const std::vector<RatVec>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty dual point");
  Rational total = 0;
  for (const auto& x : parts[0]) total += x;
  for (const auto& p : parts) {
    Rational s = 0;
    for (const auto& x : p) s += x;
    if (s != total) throw std::invalid_argument("unbalanced traces in Kronecker point");
  }
  return DualPoint{parts, {total}};
}

namespace {
template <class T, class R>
R pairing_impl(const CartanElement& h, const WeightT<T>& w) {
  if (h.parts.size() != w.parts.size() || h.scalars.size() != w.scalars.size())
    throw std::invalid_argument("pairing: shape mismatch");
  R s = 0;
  for (std::size_t f = 0; f < h.parts.size(); ++f) {
    if (h.parts[f].size() != w.parts[f].size()) throw std::invalid_argument("pairing: shape mismatch");
    for (std::size_t i = 0; i < h.parts[f].size(); ++i) s += h.parts[f][i] * w.parts[f][i];
  }
  for (std::size_t i = 0; i < h.scalars.size(); ++i) s += h.scalars[i] * w.scalars[i];
  return s;
}
}  // namespace

Integer pairing(const CartanElement& h, const WeightVector& w) { return pairing_impl<Integer, Integer>(h, w); }
Rational pairing(const CartanElement& h, const DualPoint& w) { return pairing_impl<Rational, Rational>(h, w); }

Integer pairing_negative_root(const CartanElement& h, const Root& r) {
  const auto& p = h.parts[static_cast<std::size_t>(r.factor)];
  return p[static_cast<std::size_t>(r.j)] - p[static_cast<std::size_t>(r.i)];
}

WeylElement identity_weyl(const GroupData& g) {
  WeylElement w;
  for (const auto& f : g.factors()) w.perms.push_back(identity_permutation(f.rank));
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement out;
  for (const auto& p : w.perms) out.perms.push_back(inverse(p));
  return out;
}

CartanElement weyl_act(const WeylElement& w, const CartanElement& h) {
  if (w.perms.size() != h.parts.size()) throw std::invalid_argument("weyl_act: shape mismatch");
  CartanElement out = h;
  for (std::size_t f = 0; f < h.parts.size(); ++f) {
    if (w.perms[f].size() != h.parts[f].size()) throw std::invalid_argument("weyl_act: shape mismatch");
    for (std::size_t i = 0; i < h.parts[f].size(); ++i)
      out.parts[f][static_cast<std::size_t>(w.perms[f][i])] = h.parts[f][i];
  }
  return out;
}

Permutation identity_permutation(int d) {
  Permutation p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation longest_element(int d) {
  Permutation p(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] = d - 1 - i;
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

int permutation_length(const Permutation& p) {
  int n = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++n;
  return n;
}

namespace {

struct ShuffleBuilder {
  std::vector<int> counts;       // remaining multiplicity per block
  std::vector<int> block_start;  // first index of each block in x
  std::vector<int> word;
  int target = 0;
  std::vector<Permutation>* out = nullptr;

  int max_remaining() const {
    int m = 0;
    for (std::size_t b = 0; b < counts.size(); ++b)
      for (std::size_t c = b + 1; c < counts.size(); ++c) m += counts[b] * counts[c];
    return m;
  }

  void emit() {
    Permutation p(word.size());
    std::vector<int> next = block_start;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
      const auto b = static_cast<std::size_t>(word[pos]);
      p[static_cast<std::size_t>(next[b]++)] = static_cast<int>(pos);
    }
    out->push_back(std::move(p));
  }

  void run(int acc) {
    if (acc > target || acc + max_remaining() < target) return;
    bool done = true;
    for (std::size_t b = 0; b < counts.size(); ++b) {
      if (counts[b] == 0) continue;
      done = false;
      int added = 0;
      for (std::size_t c = 0; c < b; ++c) added += counts[c];
      --counts[b];
      word.push_back(static_cast<int>(b));
      run(acc + added);
      word.pop_back();
      ++counts[b];
    }
    if (done && acc == target) emit();
  }
};

}  // namespace

std::vector<Permutation> shuffles_of_length(const IntVec& x, int ell) {
  if (!is_dominant(x)) throw std::invalid_argument("shuffles_of_length: vector is not dominant");
  ShuffleBuilder sb;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i == 0 || x[i] != x[i - 1]) {
      sb.counts.push_back(0);
      sb.block_start.push_back(static_cast<int>(i));
    }
    ++sb.counts.back();
  }
  std::vector<Permutation> out;
  sb.target = ell;
  sb.out = &out;
  if (ell >= 0) sb.run(0);
  return out;
}

std::vector<Permutation> all_shuffles(const IntVec& x) {
  std::vector<Permutation> out;
  const int d = static_cast<int>(x.size());
  for (int ell = 0; ell <= d * (d - 1) / 2; ++ell) {
    auto s = shuffles_of_length(x, ell);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

bool is_dominant(const IntVec& x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] < x[i]) return false;
  return true;
}

bool is_dominant(const CartanElement& h) {
  return std::all_of(h.parts.begin(), h.parts.end(), [](const IntVec& p) { return is_dominant(p); });
}

}  // namespace momentcone
