#pragma once

#include "momentcone/weightsys.hpp"

#include <string>
#include <vector>

namespace momentcone {

/// pi(E_{-alpha}) source = coeff * target.
struct LoweringTerm {
  int source = 0;
  int target = 0;
  int coeff = 0;
};

struct Representation {
  GroupData group;
  std::vector<std::string> labels;
  std::vector<WeightVector> weights;
  /// Indexed like group.positive_roots(); action of the matching negative root vector.
  std::vector<std::vector<LoweringTerm>> lowering;

  std::size_t dim() const { return weights.size(); }
  /// Weight of root index r as a WeightVector (negative root e_j - e_i).
  WeightVector negative_root_weight(std::size_t r) const;
};

struct HSplit {
  std::vector<int> neg, zero, pos;              // basis indices
  std::vector<int> neg_roots, zero_roots;       // indices into positive_roots(), negative root sign
  std::vector<Integer> values;                  // pairing of each basis weight
};

Representation kronecker_rep(int a, int b, int c);
Representation horn_rep(int d);

HSplit split(const Representation& rep, const CartanElement& h);

/// Throws if some stored structure constant breaks weight additivity.
void check_weight_additivity(const Representation& rep);

enum class ReductionMode { Native, Pad, Bipartite };

struct DimReduction {
  int a = 0, b = 0, c = 0;             // working dims
  std::vector<int> order;              // original factor index of each working factor
  ReductionMode mode = ReductionMode::Native;
  int padded = 0;                      // zeros appended to the last factor when padding
  int original_c = 0;
};

DimReduction reduce_dims(int a, int b, int c);

}  // namespace momentcone
