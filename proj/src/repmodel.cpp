#include "momentcone/repmodel.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <numeric>
#include <stdexcept>

namespace momentcone {

namespace {

IntVec unit(int d, int i, int sign = 1) {
  IntVec v(static_cast<std::size_t>(d), Integer(0));
  if (i >= 0) v[static_cast<std::size_t>(i)] = sign;
  return v;
}

WeightVector add(WeightVector a, const WeightVector& b) {
  for (std::size_t f = 0; f < a.parts.size(); ++f)
    for (std::size_t i = 0; i < a.parts[f].size(); ++i) a.parts[f][i] += b.parts[f][i];
  for (std::size_t s = 0; s < a.scalars.size(); ++s) a.scalars[s] += b.scalars[s];
  return a;
}

}  // namespace

WeightVector Representation::negative_root_weight(std::size_t r) const {
  const Root& root = group.positive_roots()[r];
  WeightVector w;
  for (const auto& f : group.factors()) w.parts.push_back(unit(f.rank, -1));
  w.scalars.assign(static_cast<std::size_t>(group.scalar_count()), Integer(0));
  w.parts[static_cast<std::size_t>(root.factor)][static_cast<std::size_t>(root.j)] = 1;
  w.parts[static_cast<std::size_t>(root.factor)][static_cast<std::size_t>(root.i)] = -1;
  return w;
}

Representation kronecker_rep(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("kronecker_rep: ranks must be positive");
  Representation rep;
  rep.group = GroupData::kronecker(a, b, c);
  auto index = [&](int i, int j, int k) { return (i * b + j) * c + k; };
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      for (int k = 0; k < c; ++k) {
        rep.labels.push_back("e" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1));
        rep.weights.push_back(WeightVector{{unit(a, i), unit(b, j), unit(c, k)}, {Integer(1)}});
      }
  for (const Root& r : rep.group.positive_roots()) {
    std::vector<LoweringTerm> terms;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        for (int k = 0; k < c; ++k) {
          int idx[3] = {i, j, k};
          if (idx[r.factor] != r.i) continue;
          idx[r.factor] = r.j;
          terms.push_back({index(i, j, k), index(idx[0], idx[1], idx[2]), 1});
        }
    rep.lowering.push_back(std::move(terms));
  }
  return rep;
}

Representation horn_rep(int d) {
  if (d < 1) throw std::invalid_argument("horn_rep: rank must be positive");
  Representation rep;
  rep.group = GroupData::horn(d);
  auto index = [&](int block, int i, int j) { return block * d * d + i * d + j; };
  for (int block = 0; block < 2; ++block)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        rep.labels.push_back(std::string(block == 0 ? "a" : "b") + std::to_string(i + 1) + "," + std::to_string(j + 1));
        WeightVector w{{unit(d, -1), unit(d, -1), unit(d, j, -1)}, {}};
        w.parts[static_cast<std::size_t>(block)][static_cast<std::size_t>(i)] = 1;
        rep.weights.push_back(std::move(w));
      }
  for (const Root& r : rep.group.positive_roots()) {
    std::vector<LoweringTerm> terms;
    if (r.factor < 2) {
      // left multiplication by E_{ji}: unit (i,m) -> (j,m)
      for (int m = 0; m < d; ++m) terms.push_back({index(r.factor, r.i, m), index(r.factor, r.j, m), 1});
    } else {
      // right multiplication by -E_{ji}: unit (m,j) -> (m,i)
      for (int block = 0; block < 2; ++block)
        for (int m = 0; m < d; ++m) terms.push_back({index(block, m, r.j), index(block, m, r.i), -1});
    }
    std::sort(terms.begin(), terms.end(), [](const LoweringTerm& x, const LoweringTerm& y) {
      return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });
    rep.lowering.push_back(std::move(terms));
  }
  return rep;
}

HSplit split(const Representation& rep, const CartanElement& h) {
  validate(rep.group, h);
  HSplit s;
  s.values.reserve(rep.dim());
  for (std::size_t v = 0; v < rep.dim(); ++v) {
    Integer val = pairing(h, rep.weights[v]);
    const int sg = sgn(val);
    (sg < 0 ? s.neg : sg == 0 ? s.zero : s.pos).push_back(static_cast<int>(v));
    s.values.push_back(std::move(val));
  }
  const auto& roots = rep.group.positive_roots();
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const int sg = sgn(pairing_negative_root(h, roots[r]));
    if (sg < 0) s.neg_roots.push_back(static_cast<int>(r));
    else if (sg == 0) s.zero_roots.push_back(static_cast<int>(r));
  }
  return s;
}

void check_weight_additivity(const Representation& rep) {
  for (std::size_t r = 0; r < rep.lowering.size(); ++r) {
    const WeightVector root = rep.negative_root_weight(r);
    for (const auto& t : rep.lowering[r]) {
      if (t.coeff == 0) throw std::logic_error("zero structure constant stored");
      if (!(add(rep.weights[static_cast<std::size_t>(t.source)], root) == rep.weights[static_cast<std::size_t>(t.target)]))
        throw std::logic_error("weight additivity violated at " + rep.labels[static_cast<std::size_t>(t.source)]);
    }
  }
}

DimReduction reduce_dims(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("dimensions must be positive");
  DimReduction r;
  std::array<std::pair<int, int>, 3> d{{{a, 0}, {b, 1}, {c, 2}}};
  std::stable_sort(d.begin(), d.end());
  r.a = d[0].first;
  r.b = d[1].first;
  r.c = d[2].first;
  r.order = {d[0].second, d[1].second, d[2].second};
  r.original_c = r.c;
  if (r.a == 1) {
    r.mode = ReductionMode::Bipartite;
    return r;
  }
  if (r.c > r.a * r.b) {
    r.mode = ReductionMode::Pad;
    r.padded = r.c - r.a * r.b;
    r.c = r.a * r.b;
  }
  return r;
}

}  // namespace momentcone
