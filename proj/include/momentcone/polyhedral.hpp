#pragma once

#include "momentcone/exact.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace momentcone {

/// {x : E x = 0, A x >= 0}
struct ConeHRep {
  std::size_t dim = 0;
  std::vector<IntVec> equalities;
  std::vector<IntVec> inequalities;
};

struct ConeVRep {
  std::size_t dim = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

struct DimensionDeficiency : std::runtime_error {
  std::size_t expected;
  std::size_t actual;
  DimensionDeficiency(std::size_t e, std::size_t a)
      : std::runtime_error("cone is not full-dimensional in its equality subspace: dimension " + std::to_string(a) +
                           " of " + std::to_string(e) + " (deficit " + std::to_string(e - a) + ")"),
        expected(e),
        actual(a) {}
};

ConeVRep dual_description(const ConeHRep& h);

struct FacetReduction {
  ConeHRep facets;
  std::vector<std::size_t> kept;  // indices of the input inequalities that define facets
  ConeVRep vrep;
  std::size_t cone_dim = 0;
};

/// Keeps one inequality per facet, chosen as the first in input order.
FacetReduction remove_redundant(const ConeHRep& h);

bool contains(const ConeHRep& h, const RatVec& x);
bool contains(const ConeHRep& h, const IntVec& x);
std::size_t dimension(const ConeHRep& h);

/// Blocks of coordinates that may be permuted among each other; all blocks in one group share a length.
struct SymmetrySpec {
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (offset, length)
  std::vector<std::vector<std::size_t>> groups;             // indices into blocks
};

struct OrbitReduction {
  std::vector<IntVec> representatives;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::size_t> orbit_of;  // for every input item, its representative index
};

std::vector<IntVec> symmetry_images(const IntVec& v, const SymmetrySpec& s);
IntVec orbit_representative(const IntVec& v, const SymmetrySpec& s);
/// Representative = lexicographic minimum. Orbit size = number of distinct symmetry images.
OrbitReduction dedupe_up_to_perms(const std::vector<IntVec>& items, const SymmetrySpec& s);

/// Consecutive blocks starting at 0; blocks of equal length form one group. Trailing coordinates stay fixed.
SymmetrySpec block_symmetry(const std::vector<std::size_t>& lengths);

}  // namespace momentcone
