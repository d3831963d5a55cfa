#pragma once

#include "momentcone/exact.hpp"

#include <vector>

namespace momentcone {

enum class FactorKind { SU, U };

struct Factor {
  FactorKind kind = FactorKind::SU;
  int rank = 1;
};

/// Positive root e_i - e_j (i < j) of one factor. Indices are 0-based.
struct Root {
  int factor = 0;
  int i = 0;
  int j = 0;
};

class GroupData {
 public:
  static GroupData build(std::vector<Factor> factors, int scalar_count);
  static GroupData kronecker(int a, int b, int c);
  static GroupData horn(int d);

  const std::vector<Factor>& factors() const { return factors_; }
  int scalar_count() const { return scalar_count_; }
  int cartan_rank() const { return cartan_rank_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  int factor_rank(int f) const { return factors_[static_cast<std::size_t>(f)].rank; }

  bool operator==(const GroupData& o) const;

 private:
  std::vector<Factor> factors_;
  int scalar_count_ = 0;
  int cartan_rank_ = 0;
  std::vector<Root> roots_;
};

/// H = (H_f per factor, z_s per scalar circle).
struct CartanElement {
  std::vector<IntVec> parts;
  IntVec scalars;

  IntVec flatten() const;
  bool is_zero() const;
  bool operator==(const CartanElement& o) const = default;
  bool operator<(const CartanElement& o) const;
};

template <class T>
struct WeightT {
  std::vector<std::vector<T>> parts;
  std::vector<T> scalars;
  bool operator==(const WeightT& o) const = default;
};

using WeightVector = WeightT<Integer>;
using DualPoint = WeightT<Rational>;

/// Per-factor permutations, 0-based images: p[i] = image of i.
struct WeylElement {
  std::vector<std::vector<int>> perms;
};

using Permutation = std::vector<int>;

CartanElement make_cartan(const GroupData& g, std::vector<IntVec> parts, IntVec scalars);
/// Checks shape and SU tracelessness.
void validate(const GroupData& g, const CartanElement& h);
/// Divide by the gcd of all coordinates; orientation is kept.
CartanElement canonical(const CartanElement& h);

/// Kronecker dual point with |lambda_A| = |lambda_B| = |lambda_C| stored as the scalar coordinate.
DualPoint kronecker_point(const std::vector<RatVec>& parts);

Integer pairing(const CartanElement& h, const WeightVector& w);
Rational pairing(const CartanElement& h, const DualPoint& w);
/// Pairing of H with the negative root e_j - e_i of root (factor, i, j).
Integer pairing_negative_root(const CartanElement& h, const Root& r);

WeylElement identity_weyl(const GroupData& g);
WeylElement inverse(const WeylElement& w);
CartanElement weyl_act(const WeylElement& w, const CartanElement& h);
template <class T>
WeightT<T> weyl_act(const WeylElement& w, const WeightT<T>& x) {
  WeightT<T> out = x;
  for (std::size_t f = 0; f < x.parts.size(); ++f)
    for (std::size_t i = 0; i < x.parts[f].size(); ++i)
      out.parts[f][static_cast<std::size_t>(w.perms[f][i])] = x.parts[f][i];
  return out;
}

Permutation identity_permutation(int d);
Permutation longest_element(int d);
Permutation compose(const Permutation& p, const Permutation& q);  // (p o q)(i) = p(q(i))
Permutation inverse(const Permutation& p);
bool is_permutation(const Permutation& p);
int permutation_length(const Permutation& p);

/// Permutations p of length ell with p(i) < p(j) whenever i < j and x_i = x_j.
/// x must be non-increasing. Lexicographic order of the block word.
std::vector<Permutation> shuffles_of_length(const IntVec& x, int ell);
/// All shuffles of x, in order of increasing length.
std::vector<Permutation> all_shuffles(const IntVec& x);

bool is_dominant(const IntVec& x);
bool is_dominant(const CartanElement& h);

}  // namespace momentcone
