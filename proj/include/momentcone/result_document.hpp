#pragma once

#include "momentcone/kronecker.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace momentcone {

inline constexpr const char* kToolVersion = "1.0.0";

struct FacetEntry {
  std::optional<CartanElement> label;
  IntVec normal;
  bool trivial = false;
  bool contains_highest_weight = false;
  bool contains_origin = false;
  std::optional<std::size_t> orbit_size;  // set in deduplicated listings
  bool operator==(const FacetEntry&) const = default;
};

struct RayEntry {
  IntVec ray;         // primitive integer
  RatVec normalized;  // |lambda_A| = 1
  std::optional<std::size_t> orbit_size;
  bool operator==(const RayEntry&) const = default;
};

struct Provenance {
  std::uint64_t seed = 0;
  int trials = 2;
  bool exact = false;
  std::size_t symbolic_cap = 12;
  std::string policy;
  std::string tool_version = kToolVersion;
  bool operator==(const Provenance&) const = default;
};

struct SamplingReport {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  std::size_t violations = 0;
  double worst = 0;
  bool operator==(const SamplingReport&) const = default;
};

struct ResultDocument {
  std::array<int, 3> dims{};
  std::string reduction;
  std::size_t cone_dimension = 0;
  std::size_t expected_dimension = 0;
  bool candidates_available = false;
  StageCount eplus, eplus_adm, e, inequalities, facet_count, ray_count;
  bool deduplicated = false;
  std::vector<FacetEntry> facets;
  std::vector<RayEntry> rays;
  Provenance provenance;
  std::optional<SamplingReport> sampling;
  bool operator==(const ResultDocument&) const = default;
};

std::string policy_name(const RessayrePolicy& p);
std::string reduction_name(const DimReduction& r);

/// Full lists, or one entry per orbit when dedupe is set.
ResultDocument make_document(const KroneckerCone& k, const RessayrePolicy& policy, bool dedupe);

nlohmann::ordered_json to_json(const ResultDocument& doc);
/// Throws std::invalid_argument on schema violations.
ResultDocument document_from_json(const nlohmann::ordered_json& j);

/// Two-space indented, newline-terminated.
std::string serialize(const ResultDocument& doc);
ResultDocument parse_document(const std::string& text);

}  // namespace momentcone
