#include "momentcone/candidates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace momentcone {

bool is_standard(const Tableau& t) {
  const int n = t.rows * t.cols;
  if (static_cast<int>(t.entries.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : t.entries) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (int i = 0; i < t.rows; ++i)
    for (int j = 0; j < t.cols; ++j) {
      if (j + 1 < t.cols && t.at(i, j) > t.at(i, j + 1)) return false;
      if (i + 1 < t.rows && t.at(i, j) > t.at(i + 1, j)) return false;
    }
  return true;
}

namespace {

void fill_tableau(Tableau& t, std::vector<int>& filled, int v, const std::function<void(const Tableau&)>& visit) {
  if (v > t.rows * t.cols) {
    visit(t);
    return;
  }
  for (int r = 0; r < t.rows; ++r) {
    const int c = filled[static_cast<std::size_t>(r)];
    if (c >= t.cols) continue;
    if (r > 0 && filled[static_cast<std::size_t>(r - 1)] <= c) continue;
    t.entries[static_cast<std::size_t>(r * t.cols + c)] = v;
    ++filled[static_cast<std::size_t>(r)];
    fill_tableau(t, filled, v + 1, visit);
    --filled[static_cast<std::size_t>(r)];
  }
}

IntVec concat(const IntVec& x, const IntVec& y) {
  IntVec out = x;
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

}  // namespace

void for_each_rectangular_tableau(int a, int b, const std::function<void(const Tableau&)>& visit) {
  if (a < 1 || b < 1) throw std::invalid_argument("tableau shape must be positive");
  Tableau t{a, b, std::vector<int>(static_cast<std::size_t>(a * b), 0)};
  std::vector<int> filled(static_cast<std::size_t>(a), 0);
  fill_tableau(t, filled, 1, visit);
}

std::vector<Tableau> rectangular_tableaux(int a, int b) {
  std::vector<Tableau> out;
  for_each_rectangular_tableau(a, b, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::optional<Cubicle> cubicle_of(const Tableau& t) {
  const int a = t.rows, b = t.cols, n = a * b;
  Cubicle cub;
  cub.order.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) cub.order[static_cast<std::size_t>(t.at(i, j) - 1)] = {i, j};
  ConeHRep h;
  h.dim = static_cast<std::size_t>(a + b);
  IntVec tr_a(h.dim, Integer(0)), tr_b(h.dim, Integer(0));
  for (int i = 0; i < a; ++i) tr_a[static_cast<std::size_t>(i)] = 1;
  for (int j = 0; j < b; ++j) tr_b[static_cast<std::size_t>(a + j)] = 1;
  h.equalities = {tr_a, tr_b};
  for (int v = 0; v + 1 < n; ++v) {
    IntVec row(h.dim, Integer(0));
    const auto [i, j] = cub.order[static_cast<std::size_t>(v)];
    const auto [k, l] = cub.order[static_cast<std::size_t>(v + 1)];
    row[static_cast<std::size_t>(i)] += 1;
    row[static_cast<std::size_t>(a + j)] += 1;
    row[static_cast<std::size_t>(k)] -= 1;
    row[static_cast<std::size_t>(a + l)] -= 1;
    h.inequalities.push_back(std::move(row));
  }
  ConeVRep v = dual_description(h);
  if (!v.lineality.empty() || rank(v.rays) != static_cast<std::size_t>(a + b - 2)) return std::nullopt;
  cub.generators = std::move(v.rays);
  return cub;
}

ExtremalEdge make_edge(const IntVec& h_a, const IntVec& h_b) {
  ExtremalEdge e;
  e.pair = primitive(concat(h_a, h_b));
  const std::size_t a = h_a.size(), b = h_b.size();
  IntVec ea(e.pair.begin(), e.pair.begin() + static_cast<std::ptrdiff_t>(a));
  IntVec eb(e.pair.begin() + static_cast<std::ptrdiff_t>(a), e.pair.end());
  const Integer g = gcd(gcd_of_differences(ea), gcd_of_differences(eb));
  auto scale = [&](const IntVec& x, std::size_t d) {
    IntVec out;
    for (const auto& v : x) out.push_back(Integer(v * static_cast<long>(d)) / g);
    return out;
  };
  e.key_a = scale(ea, a);
  e.key_b = scale(eb, b);
  return e;
}

bool edge_component_primitivity(const ExtremalEdge& e) {
  auto ok = [](const IntVec& key) {
    if (is_zero(key)) return true;
    return gcd_of_differences(key) == static_cast<long>(key.size());
  };
  return ok(e.key_a) && ok(e.key_b);
}

EdgeSet extremal_edges(int a, int b, Exec exec) {
  if (a < 2 || b < 2) throw std::invalid_argument("extremal_edges needs ranks of at least 2");
  EdgeSet out;
  out.a = a;
  out.b = b;
  const std::vector<Tableau> tabs = rectangular_tableaux(a, b);
  out.tableaux = tabs.size();
  std::vector<std::optional<Cubicle>> cubs(tabs.size());
  const long n = static_cast<long>(tabs.size());
#pragma omp parallel for schedule(dynamic, 16) if (exec == Exec::Parallel)
  for (long i = 0; i < n; ++i) cubs[static_cast<std::size_t>(i)] = cubicle_of(tabs[static_cast<std::size_t>(i)]);
  std::set<IntVec> rays;
  for (const auto& c : cubs) {
    if (!c) continue;
    ++out.cubicles;
    rays.insert(c->generators.begin(), c->generators.end());
  }
  std::vector<IntVec> pairs;
  for (const auto& r : rays) {
    IntVec ha(r.begin(), r.begin() + a), hb(r.begin() + a, r.end());
    out.edges.push_back(make_edge(ha, hb));
    pairs.push_back(out.edges.back().pair);
  }
  out.reduced = dedupe_up_to_perms(pairs, block_symmetry({static_cast<std::size_t>(a), static_cast<std::size_t>(b)}))
                    .representatives.size();
  return out;
}

SymmetrySpec kronecker_symmetry(int a, int b, int c) {
  return block_symmetry({static_cast<std::size_t>(a), static_cast<std::size_t>(b), static_cast<std::size_t>(c)});
}

std::size_t count_up_to_perms(const std::vector<CartanElement>& hs, const SymmetrySpec& s) {
  std::set<IntVec> reps;
  for (const auto& h : hs) reps.insert(orbit_representative(h.flatten(), s));
  return reps.size();
}

namespace {

using KeyMap = std::map<IntVec, std::vector<IntVec>>;

/// key of the first component -> keys of the second component.
KeyMap index_edges(const EdgeSet& es, bool swap) {
  KeyMap m;
  for (const auto& e : es.edges) {
    if (swap) m[e.key_b].push_back(e.key_a);
    else m[e.key_a].push_back(e.key_b);
  }
  return m;
}

IntVec zeros(int d) { return IntVec(static_cast<std::size_t>(d), Integer(0)); }

}  // namespace

CandidateSet tripartite_candidates(int a, int b, int c, Exec exec) {
  if (!(1 < a && a <= b && b <= c && c <= a * b)) throw std::invalid_argument("tripartite_candidates needs 1 < a <= b <= c <= ab");
  const EdgeSet ab = extremal_edges(a, b, exec);
  const EdgeSet ac = (c == b) ? ab : extremal_edges(a, c, exec);
  const EdgeSet bc = (a == b) ? ac : extremal_edges(b, c, exec);
  return tripartite_candidates(a, b, c, ab, ac, bc, exec);
}

CandidateSet tripartite_candidates(int a, int b, int c, const EdgeSet& ab, const EdgeSet& ac, const EdgeSet& bc,
                                   Exec exec) {
  const KeyMap map_ab = index_edges(ab, false);
  const KeyMap map_ac = index_edges(ac, false);
  std::set<std::pair<IntVec, IntVec>> set_bc;
  for (const auto& e : bc.edges) set_bc.emplace(e.key_a, e.key_b);
  std::set<IntVec> firsts{zeros(a)};
  for (const auto& [k, v] : map_ab) firsts.insert(k);
  for (const auto& [k, v] : map_ac) firsts.insert(k);
  const std::vector<IntVec> xs(firsts.begin(), firsts.end());

  std::vector<std::vector<CartanElement>> found(xs.size());
  const long n = static_cast<long>(xs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (long t = 0; t < n; ++t) {
    const IntVec& xa = xs[static_cast<std::size_t>(t)];
    const bool za = is_zero(xa);
    std::vector<IntVec> lb, lc;
    if (auto it = map_ab.find(xa); it != map_ab.end()) lb = it->second;
    if (auto it = map_ac.find(xa); it != map_ac.end()) lc = it->second;
    if (za) {
      lb.push_back(zeros(b));
      lc.push_back(zeros(c));
    }
    for (const auto& xb : lb)
      for (const auto& xc : lc) {
        const bool zb = is_zero(xb), zc = is_zero(xc);
        if (za && zb && zc) continue;
        if (!(zb && zc) && !set_bc.count({xb, xc})) continue;
        RatVec q;
        for (const auto& v : xa) q.emplace_back(v, Integer(a));
        for (const auto& v : xb) q.emplace_back(v, Integer(b));
        for (const auto& v : xc) q.emplace_back(v, Integer(c));
        for (auto& x : q) x.canonicalize();
        IntVec h = canonicalize(q);
        CartanElement el;
        el.parts = {IntVec(h.begin(), h.begin() + a), IntVec(h.begin() + a, h.begin() + a + b),
                    IntVec(h.begin() + a + b, h.end())};
        el.scalars = {Integer(0)};
        found[static_cast<std::size_t>(t)].push_back(std::move(el));
      }
  }
  CandidateSet out;
  out.stage = Stage::EPlus;
  std::set<CartanElement> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  out.elements.assign(all.begin(), all.end());
  out.reduced = count_up_to_perms(out.elements, kronecker_symmetry(a, b, c));
  return out;
}

IntVec weight_coordinates(const GroupData& g, const WeightVector& w) {
  IntVec out;
  out.reserve(static_cast<std::size_t>(g.cartan_rank()));
  for (std::size_t f = 0; f < g.factors().size(); ++f) {
    const auto& p = w.parts[f];
    if (g.factors()[f].kind == FactorKind::SU) {
      for (std::size_t m = 0; m + 1 < p.size(); ++m) out.push_back(p[m] - p[m + 1]);
    } else {
      out.insert(out.end(), p.begin(), p.end());
    }
  }
  out.insert(out.end(), w.scalars.begin(), w.scalars.end());
  return out;
}

bool is_admissible(const Representation& rep, const CartanElement& h) {
  validate(rep.group, h);
  if (h.is_zero()) return false;
  std::vector<IntVec> rows;
  for (const auto& w : rep.weights)
    if (pairing(h, w) == 0) rows.push_back(weight_coordinates(rep.group, w));
  return static_cast<int>(rank(rows)) == rep.group.cartan_rank() - 1;
}

std::vector<CartanElement> admissible_z(const Representation& rep, const CartanElement& triple) {
  CartanElement base = triple;
  base.scalars.assign(1, Integer(0));
  std::set<Integer> zs;
  for (const auto& w : rep.weights) zs.insert(-pairing(base, w));
  std::set<CartanElement> out;
  for (const auto& z : zs) {
    CartanElement h = base;
    h.scalars[0] = z;
    if (is_admissible(rep, h)) out.insert(canonical(h));
  }
  return {out.begin(), out.end()};
}

CandidateSet admissible_candidates(const Representation& rep, const CandidateSet& eplus, Exec exec) {
  std::vector<std::vector<CartanElement>> found(eplus.elements.size());
  const long n = static_cast<long>(eplus.elements.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (long i = 0; i < n; ++i)
    found[static_cast<std::size_t>(i)] = admissible_z(rep, eplus.elements[static_cast<std::size_t>(i)]);
  std::set<CartanElement> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  CandidateSet out;
  out.stage = Stage::EPlusAdm;
  out.elements.assign(all.begin(), all.end());
  const auto& fs = rep.group.factors();
  std::vector<std::size_t> lens;
  for (const auto& f : fs) lens.push_back(static_cast<std::size_t>(f.rank));
  out.reduced = count_up_to_perms(out.elements, block_symmetry(lens));
  return out;
}

std::vector<CartanElement> trace_filtered_orbit(const Representation& rep, const CartanElement& h0) {
  if (!is_dominant(h0)) throw std::invalid_argument("trace_filtered_orbit needs a dominant element");
  const int target = static_cast<int>(split(rep, h0).neg.size());
  const std::size_t nf = h0.parts.size();
  std::vector<std::vector<std::vector<Permutation>>> by_len(nf);
  std::vector<Permutation> w0(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const int d = static_cast<int>(h0.parts[f].size());
    w0[f] = longest_element(d);
    for (int ell = 0; ell <= d * (d - 1) / 2; ++ell) by_len[f].push_back(shuffles_of_length(h0.parts[f], ell));
  }
  std::vector<CartanElement> out;
  WeylElement w;
  w.perms.resize(nf);
  std::function<void(std::size_t, int)> rec = [&](std::size_t f, int remaining) {
    if (f == nf) {
      if (remaining == 0) out.push_back(weyl_act(w, h0));
      return;
    }
    for (int ell = 0; ell < static_cast<int>(by_len[f].size()) && ell <= remaining; ++ell)
      for (const auto& p : by_len[f][static_cast<std::size_t>(ell)]) {
        w.perms[f] = compose(w0[f], p);
        rec(f + 1, remaining - ell);
      }
  };
  rec(0, target);
  return out;
}

CandidateSet orbit_candidates(const Representation& rep, const CandidateSet& adm, Exec exec) {
  std::vector<std::vector<CartanElement>> found(adm.elements.size());
  const long n = static_cast<long>(adm.elements.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (long i = 0; i < n; ++i)
    found[static_cast<std::size_t>(i)] = trace_filtered_orbit(rep, adm.elements[static_cast<std::size_t>(i)]);
  std::set<CartanElement> all;
  for (auto& f : found) all.insert(f.begin(), f.end());
  CandidateSet out;
  out.stage = Stage::E;
  out.elements.assign(all.begin(), all.end());
  std::vector<std::size_t> lens;
  for (const auto& f : rep.group.factors()) lens.push_back(static_cast<std::size_t>(f.rank));
  out.reduced = count_up_to_perms(out.elements, block_symmetry(lens));
  return out;
}

ConeHRep bipartite_cone(int a, int b) {
  if (a < 1 || b < a) throw std::invalid_argument("bipartite_cone needs 1 <= a <= b");
  ConeHRep h;
  h.dim = static_cast<std::size_t>(a + b);
  for (int i = 0; i < a; ++i) {
    IntVec row(h.dim, Integer(0));
    row[static_cast<std::size_t>(i)] = 1;
    if (i + 1 < a) row[static_cast<std::size_t>(i + 1)] = -1;
    h.inequalities.push_back(std::move(row));
  }
  for (int k = 0; k < b; ++k) {
    IntVec row(h.dim, Integer(0));
    row[static_cast<std::size_t>(a + k)] = 1;
    if (k < a) row[static_cast<std::size_t>(k)] = -1;
    h.equalities.push_back(std::move(row));
  }
  return h;
}

}  // namespace momentcone
