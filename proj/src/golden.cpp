#include "momentcone/golden.hpp"

#include <map>
#include <sstream>

namespace momentcone {

namespace {

RatVec parse_list(const char* s) {
  RatVec out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  return out;
}

std::string show(const IntVec& key) { return to_string(key); }

}  // namespace

RatVec golden_ray_vector(const GoldenRay& r) {
  RatVec out;
  for (const char* part : {r.a, r.b, r.c}) {
    const RatVec v = parse_list(part);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

IntVec golden_facet_key(const GoldenFacet& f) {
  IntVec out;
  for (const auto* part : {&f.h_a, &f.h_b, &f.h_c})
    for (long long x : *part) out.emplace_back(static_cast<long>(x));
  out.emplace_back(static_cast<long>(f.z));
  return out;
}

TableDiff compare_facets_444(const KroneckerCone& k) {
  TableDiff diff;
  const SymmetrySpec sym = kronecker_symmetry(4, 4, 4);
  std::map<IntVec, const KroneckerFacet*> computed;
  for (const auto& f : k.facets) {
    if (!f.label) continue;
    computed.emplace(orbit_representative(f.label->flatten(), sym), &f);
  }
  diff.computed = computed.size();
  std::map<IntVec, const GoldenFacet*> expected;
  for (const auto& g : golden_facets_444()) expected.emplace(orbit_representative(golden_facet_key(g), sym), &g);
  diff.expected = expected.size();
  for (const auto& [key, g] : expected) {
    auto it = computed.find(key);
    if (it == computed.end()) {
      diff.missing.push_back("row " + std::to_string(g->row) + " " + show(key));
      continue;
    }
    if (it->second->contains_highest_weight != g->contains_highest_weight ||
        it->second->contains_origin != g->contains_origin)
      diff.markers.push_back("row " + std::to_string(g->row) + " " + show(key));
  }
  for (const auto& [key, f] : computed)
    if (!expected.count(key)) diff.unexpected.push_back(show(key));
  return diff;
}

TableDiff compare_rays_444(const KroneckerCone& k) {
  TableDiff diff;
  const SymmetrySpec sym = ambient_symmetry(4, 4, 4);
  std::map<IntVec, int> computed;
  for (const auto& r : k.rays) computed.emplace(orbit_representative(r, sym), 0);
  diff.computed = computed.size();
  std::map<IntVec, int> expected;
  for (const auto& g : golden_rays_444()) expected.emplace(orbit_representative(canonicalize(golden_ray_vector(g)), sym), g.row);
  diff.expected = expected.size();
  for (const auto& [key, row] : expected)
    if (!computed.count(key)) diff.missing.push_back("row " + std::to_string(row) + " " + show(key));
  for (const auto& [key, unused] : computed)
    if (!expected.count(key)) diff.unexpected.push_back(show(key));
  return diff;
}

}  // namespace momentcone
