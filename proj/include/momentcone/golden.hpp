#pragma once

#include "momentcone/kronecker.hpp"

#include <string>
#include <vector>

namespace momentcone {

struct EdgeCountRow {
  int a, b;
  std::size_t tableaux, cubicles;
  StageCount edges;
};

struct StageCountRow {
  int a, b, c;
  StageCount eplus, eplus_adm, e, inequalities, facets, rays;
};

/// Comma-separated rationals per factor.
struct GoldenRay {
  int row;
  const char* a;
  const char* b;
  const char* c;
};

struct GoldenFacet {
  int row;
  std::vector<long long> h_a, h_b, h_c;
  long long z;
  bool contains_highest_weight;
  bool contains_origin;
};

const std::vector<EdgeCountRow>& golden_edge_counts();
const std::vector<StageCountRow>& golden_stage_counts();
const std::vector<GoldenRay>& golden_rays_444();
const std::vector<GoldenFacet>& golden_facets_444();

RatVec golden_ray_vector(const GoldenRay& r);
/// (H_A, H_B, H_C, z) flattened.
IntVec golden_facet_key(const GoldenFacet& f);

struct TableDiff {
  std::size_t expected = 0;
  std::size_t computed = 0;
  std::vector<std::string> missing;     // fixture rows with no computed orbit
  std::vector<std::string> unexpected;  // computed orbits absent from the fixture
  std::vector<std::string> markers;     // matched rows whose markers differ
  bool ok() const { return missing.empty() && unexpected.empty() && markers.empty(); }
};

/// Facet orbits of a computed C(4,4,4) against the fixture, markers included.
TableDiff compare_facets_444(const KroneckerCone& k);
/// Ray orbits of a computed C(4,4,4) against the fixture, as exact rationals.
TableDiff compare_rays_444(const KroneckerCone& k);

}  // namespace momentcone
