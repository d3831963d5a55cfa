#pragma once

#include "momentcone/ressayre.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace momentcone {

/// Three r-subsets of {1..d}, 1-based and strictly increasing.
struct SubsetTriple {
  int d = 0;
  int r = 0;
  std::array<std::vector<int>, 3> sets;
  bool operator==(const SubsetTriple&) const = default;
  auto operator<=>(const SubsetTriple&) const = default;
};

void validate(const SubsetTriple& t);
std::string to_string(const SubsetTriple& t);
/// "{1,3,5};{1,3,5};{1,3,5}". Throws std::invalid_argument.
SubsetTriple parse_subset_triple(const std::string& s, int d);

std::vector<int> complement(const std::vector<int>& subset, int d);
/// (d - r - (i_a - a))_a, a partition with at most r parts.
std::vector<int> subset_partition(const std::vector<int>& subset, int d);

/// |lambda_I| + |lambda_J| + |lambda_K| == 2 (d - r) r
bool horn_trace(const SubsetTriple& t);

/// Triples passing the trace condition and every smaller Horn inequality. Memoized, thread-safe.
const std::vector<SubsetTriple>& horn_sets(int d, int r);

/// Spectra (x, y, z), all non-increasing, of X >= 0, Y >= 0, Z <= 0 with X + Y + Z = 0.
struct HornPoint {
  RatVec x, y, z;
};

struct HornVerdict {
  bool member = false;
  std::string reason;                     // empty for members
  std::optional<SubsetTriple> violated;   // first failing inequality
  explicit operator bool() const { return member; }
};

/// sum_I x + sum_J y + sum_K z
Rational horn_form(const SubsetTriple& t, const HornPoint& p);
HornVerdict horn_membership(const HornPoint& p);

/// The point (lambda_I, lambda_J, lambda_K - 2(d-r)) in the rank-r cone.
HornPoint horn_condition_point(const SubsetTriple& t);
/// The complementary point (lambda_I^c, lambda_J^c, lambda_K^c - r) in the rank-(d-r) cone.
HornPoint horn_dual_point(const SubsetTriple& t);
bool horn_condition(const SubsetTriple& t);
bool horn_dual_condition(const SubsetTriple& t);

/// Six parts: the three r-blocks followed by the three (d-r)-blocks.
WeightVector kappa_ijk(const SubsetTriple& t);

/// Square matrix of (X, Y, Z) -> (X a - a' Z, Y b - b' Z) on the allowed entries of X, Y, Z.
/// Variables: a, b (r x r), then a', b' ((d-r) x (d-r)), all row-major.
TangentMatrix horn_tangent_matrix(const SubsetTriple& t);
PitVerdict horn_tangent_det(const SubsetTriple& t, int trials, std::uint64_t seed);

/// (E_I, E_J, E_K) as a Cartan element of U(d)^3.
CartanElement horn_cartan(const SubsetTriple& t);
/// Splits a U(d)^3 weight into the six blocks indexed like kappa_ijk.
WeightVector restrict_to_blocks(const SubsetTriple& t, const WeightVector& w);

/// All r-subsets of {1..d} in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int d, int r);

}  // namespace momentcone
