#pragma once

#include "momentcone/candidates.hpp"
#include "momentcone/ressayre.hpp"

#include <functional>
#include <optional>
#include <string>

namespace momentcone {

struct KroneckerOptions {
  RessayrePolicy policy;
  Exec exec = Exec::Parallel;
  std::function<void(const std::string&)> log;  // progress lines, optional
};

struct StageCount {
  std::size_t total = 0;
  std::size_t reduced = 0;
  bool operator==(const StageCount&) const = default;
};

struct KroneckerFacet {
  std::optional<CartanElement> label;  // (H_A, H_B, H_C, z) when the facet comes from a Cartan element
  IntVec normal;                       // ambient normal on (lambda_A, lambda_B, lambda_C)
  bool trivial = false;
  bool contains_highest_weight = false;
  bool contains_origin = false;
};

struct KroneckerCone {
  int a = 0, b = 0, c = 0;  // as requested
  DimReduction reduction;
  StageCount eplus, eplus_adm, e, inequalities, facets_count, rays_count;
  bool candidates_available = false;  // false in the bipartite dispatch
  std::vector<CartanElement> eplus_elements, eplus_adm_elements, e_elements, ressayre_elements;
  std::vector<KroneckerFacet> facets;
  std::vector<IntVec> rays;  // primitive integer, ambient coordinates
  ConeHRep hrep;             // equalities and facet normals
  std::size_t cone_dim = 0;
  std::size_t expected_dim = 0;
};

/// Full pipeline: candidates, Ressayre test, facets and rays. Throws DimensionDeficiency.
KroneckerCone compute_kronecker(int a, int b, int c, const KroneckerOptions& opts = {});

/// Ambient symmetry for the (lambda_A, lambda_B, lambda_C) layout.
SymmetrySpec ambient_symmetry(int a, int b, int c);
/// Ray normalized to |lambda_A| = 1.
RatVec normalized_ray(const IntVec& ray, int a);
IntVec highest_weight_point(int a, int b, int c);
/// (tau_a, tau_b, tau_c) scaled by abc.
IntVec origin_point(int a, int b, int c);

std::vector<IntVec> facet_keys(const KroneckerCone& k);

}  // namespace momentcone
