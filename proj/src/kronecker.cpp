#include "momentcone/kronecker.hpp"

#include <algorithm>
#include <map>

namespace momentcone {

SymmetrySpec ambient_symmetry(int a, int b, int c) { return kronecker_symmetry(a, b, c); }

RatVec normalized_ray(const IntVec& ray, int a) {
  Integer total = 0;
  for (int i = 0; i < a; ++i) total += ray[static_cast<std::size_t>(i)];
  RatVec out;
  for (const auto& x : ray) {
    Rational q(x, total == 0 ? Integer(1) : total);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

IntVec highest_weight_point(int a, int b, int c) {
  IntVec p(static_cast<std::size_t>(a + b + c), Integer(0));
  p[0] = 1;
  p[static_cast<std::size_t>(a)] = 1;
  p[static_cast<std::size_t>(a + b)] = 1;
  return p;
}

IntVec origin_point(int a, int b, int c) {
  IntVec p;
  for (int i = 0; i < a; ++i) p.emplace_back(b * c);
  for (int i = 0; i < b; ++i) p.emplace_back(a * c);
  for (int i = 0; i < c; ++i) p.emplace_back(a * b);
  return p;
}

std::vector<IntVec> facet_keys(const KroneckerCone& k) {
  std::vector<IntVec> keys;
  for (const auto& f : k.facets) keys.push_back(f.label ? f.label->flatten() : f.normal);
  return keys;
}

namespace {

/// Maps working-order data back to the requested factor order, padding the last working factor.
struct Lifter {
  DimReduction r;

  std::vector<IntVec> blocks_to_original(std::vector<IntVec> working) const {
    if (r.padded > 0) working[2].resize(working[2].size() + static_cast<std::size_t>(r.padded), Integer(0));
    std::vector<IntVec> out(3);
    for (std::size_t t = 0; t < 3; ++t) out[static_cast<std::size_t>(r.order[t])] = std::move(working[t]);
    return out;
  }

  std::vector<IntVec> split_ambient(const IntVec& v, int a, int b) const {
    return {IntVec(v.begin(), v.begin() + a), IntVec(v.begin() + a, v.begin() + a + b), IntVec(v.begin() + a + b, v.end())};
  }

  IntVec ambient(const IntVec& v) const {
    auto blocks = blocks_to_original(split_ambient(v, r.a, r.b));
    IntVec out;
    for (const auto& bl : blocks) out.insert(out.end(), bl.begin(), bl.end());
    return out;
  }

  CartanElement cartan(const CartanElement& h) const {
    CartanElement out;
    out.parts = blocks_to_original(h.parts);
    out.scalars = h.scalars;
    return out;
  }
};

ConeHRep original_equalities(int a, int b, int c, const DimReduction& r) {
  ConeHRep h;
  h.dim = static_cast<std::size_t>(a + b + c);
  const int d[3] = {a, b, c};
  int off[3] = {0, a, a + b};
  for (int f = 1; f < 3; ++f) {
    IntVec row(h.dim, Integer(0));
    for (int i = 0; i < d[0]; ++i) row[static_cast<std::size_t>(off[0] + i)] = 1;
    for (int i = 0; i < d[f]; ++i) row[static_cast<std::size_t>(off[f] + i)] = -1;
    h.equalities.push_back(std::move(row));
  }
  if (r.padded > 0) {
    const int f = r.order[2];
    for (int k = d[f] - r.padded; k < d[f]; ++k) {
      IntVec row(h.dim, Integer(0));
      row[static_cast<std::size_t>(off[f] + k)] = 1;
      h.equalities.push_back(std::move(row));
    }
  }
  return h;
}

void finish_markers(KroneckerCone& k) {
  const IntVec hw = highest_weight_point(k.a, k.b, k.c);
  const IntVec origin = origin_point(k.a, k.b, k.c);
  for (auto& f : k.facets) {
    f.contains_highest_weight = dot(f.normal, hw) == 0;
    f.contains_origin = dot(f.normal, origin) == 0;
  }
  const SymmetrySpec s = ambient_symmetry(k.a, k.b, k.c);
  k.facets_count = {k.facets.size(), dedupe_up_to_perms(facet_keys(k), s).representatives.size()};
  k.rays_count = {k.rays.size(), dedupe_up_to_perms(k.rays, s).representatives.size()};
}

KroneckerCone bipartite_dispatch(int a, int b, int c, const DimReduction& r) {
  KroneckerCone k;
  k.a = a;
  k.b = b;
  k.c = c;
  k.reduction = r;
  const int wb = r.b, wc = r.c;
  ConeHRep bip = bipartite_cone(wb, wc);
  ConeHRep h;
  h.dim = static_cast<std::size_t>(1 + wb + wc);
  auto shift = [&](const IntVec& row) {
    IntVec out(1, Integer(0));
    out.insert(out.end(), row.begin(), row.end());
    return out;
  };
  for (const auto& e : bip.equalities) h.equalities.push_back(shift(e));
  for (const auto& ineq : bip.inequalities) h.inequalities.push_back(shift(ineq));
  IntVec tr(h.dim, Integer(0));
  tr[0] = 1;
  for (int i = 0; i < wb; ++i) tr[static_cast<std::size_t>(1 + i)] = -1;
  h.equalities.push_back(tr);
  FacetReduction fr = remove_redundant(h);
  Lifter lift{r};
  k.cone_dim = fr.cone_dim;
  k.expected_dim = fr.cone_dim;
  k.hrep.dim = h.dim;
  for (const auto& e : h.equalities) k.hrep.equalities.push_back(lift.ambient(e));
  for (std::size_t i : fr.kept) {
    KroneckerFacet f;
    f.normal = lift.ambient(h.inequalities[i]);
    f.trivial = i + 1 < static_cast<std::size_t>(wb);
    k.hrep.inequalities.push_back(f.normal);
    k.facets.push_back(std::move(f));
  }
  for (const auto& ray : fr.vrep.rays) k.rays.push_back(lift.ambient(ray));
  std::sort(k.rays.begin(), k.rays.end());
  finish_markers(k);
  return k;
}

}  // namespace

KroneckerCone compute_kronecker(int a, int b, int c, const KroneckerOptions& opts) {
  auto log = [&](const std::string& s) {
    if (opts.log) opts.log(s);
  };
  const DimReduction r = reduce_dims(a, b, c);
  if (r.mode == ReductionMode::Bipartite) return bipartite_dispatch(a, b, c, r);

  KroneckerCone k;
  k.a = a;
  k.b = b;
  k.c = c;
  k.reduction = r;
  k.candidates_available = true;
  const Lifter lift{r};
  const Representation rep = kronecker_rep(r.a, r.b, r.c);
  k.expected_dim = static_cast<std::size_t>(rep.group.cartan_rank());

  const EdgeSet ab = extremal_edges(r.a, r.b, opts.exec);
  const EdgeSet ac = (r.c == r.b) ? ab : extremal_edges(r.a, r.c, opts.exec);
  const EdgeSet bc = (r.a == r.b) ? ac : extremal_edges(r.b, r.c, opts.exec);
  log("extremal edges: " + std::to_string(ab.edges.size()) + " / " + std::to_string(ac.edges.size()) + " / " +
      std::to_string(bc.edges.size()));
  const CandidateSet eplus = tripartite_candidates(r.a, r.b, r.c, ab, ac, bc, opts.exec);
  log("E+: " + std::to_string(eplus.elements.size()));
  const CandidateSet adm = admissible_candidates(rep, eplus, opts.exec);
  log("E+adm: " + std::to_string(adm.elements.size()));
  const CandidateSet e = orbit_candidates(rep, adm, opts.exec);
  log("E: " + std::to_string(e.elements.size()));

  std::vector<char> pass(e.elements.size(), 0);
  const long n = static_cast<long>(e.elements.size());
#pragma omp parallel for schedule(dynamic, 8) if (opts.exec == Exec::Parallel)
  for (long i = 0; i < n; ++i)
    pass[static_cast<std::size_t>(i)] = decide_determinant(rep, e.elements[static_cast<std::size_t>(i)], opts.policy).nonzero;
  std::vector<CartanElement> ressayre;
  for (std::size_t i = 0; i < pass.size(); ++i)
    if (pass[i]) ressayre.push_back(e.elements[i]);
  log("Ressayre elements: " + std::to_string(ressayre.size()));

  const LabeledHRep lh = compute_hrep(rep, ressayre);
  const FacetReduction fr = remove_redundant(lh.cone);
  k.cone_dim = fr.cone_dim;
  log("facets: " + std::to_string(fr.kept.size()) + ", rays: " + std::to_string(fr.vrep.rays.size()));

  const SymmetrySpec sym = kronecker_symmetry(a, b, c);
  auto lift_all = [&](const std::vector<CartanElement>& hs) {
    std::vector<CartanElement> out;
    for (const auto& h : hs) out.push_back(lift.cartan(h));
    std::sort(out.begin(), out.end());
    return out;
  };
  k.eplus_elements = lift_all(eplus.elements);
  k.eplus_adm_elements = lift_all(adm.elements);
  k.e_elements = lift_all(e.elements);
  k.ressayre_elements = lift_all(ressayre);
  k.eplus = {eplus.elements.size(), eplus.reduced};
  k.eplus_adm = {adm.elements.size(), adm.reduced};
  k.e = {e.elements.size(), e.reduced};
  k.inequalities = {ressayre.size(), count_up_to_perms(k.ressayre_elements, sym)};

  const GroupData og = GroupData::kronecker(a, b, c);
  k.hrep = original_equalities(a, b, c, r);
  for (std::size_t i : fr.kept) {
    KroneckerFacet f;
    f.label = lift.cartan(lh.labels[i]);
    f.normal = ambient_normal(og, *f.label);
    f.trivial = i < lh.trivial_count;
    k.hrep.inequalities.push_back(f.normal);
    k.facets.push_back(std::move(f));
  }
  std::vector<std::size_t> idx(k.facets.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return k.facets[x].label->flatten() < k.facets[y].label->flatten(); });
  std::vector<KroneckerFacet> sorted;
  for (auto i : idx) sorted.push_back(k.facets[i]);
  k.facets = std::move(sorted);
  k.hrep.inequalities.clear();
  for (const auto& f : k.facets) k.hrep.inequalities.push_back(f.normal);
  for (const auto& ray : fr.vrep.rays) k.rays.push_back(lift.ambient(ray));
  std::sort(k.rays.begin(), k.rays.end());
  finish_markers(k);
  return k;
}

}  // namespace momentcone
