#pragma once

#include "momentcone/polyhedral.hpp"
#include "momentcone/polynomial.hpp"
#include "momentcone/repmodel.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace momentcone {

struct TraceViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rows: basis of H(H<0). Columns: roots of n_-(H<0). Entries: linear forms in psi_v, v in H(H=0).
struct TangentMatrix {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<int> vars;
  std::vector<std::vector<LinearForm>> entries;
  std::size_t size() const { return rows.size(); }
};

TangentMatrix tangent_matrix(const Representation& rep, const CartanElement& h);
/// Square matrix of linear forms, for callers that assemble their own maps.
TangentMatrix make_square(std::vector<std::vector<LinearForm>> entries, std::vector<int> vars);

struct PitVerdict {
  enum class Outcome { NonzeroCertified, ZeroProbable };
  Outcome outcome = Outcome::ZeroProbable;
  int trials_used = 0;
  Rational failure_bound = 0;  // (k/p)^t for zero-probable, 0 otherwise
  bool nonzero() const { return outcome == Outcome::NonzeroCertified; }
};

/// Evaluate the determinant at a point; values indexed by variable id.
std::uint64_t det_at(const TangentMatrix& m, const std::vector<std::uint64_t>& values);
std::size_t variable_bound(const TangentMatrix& m);
PitVerdict det_nonzero_pit(const TangentMatrix& m, int trials, std::uint64_t seed);
Polynomial det_symbolic(const TangentMatrix& m, std::size_t cap = 12);

/// sum of the weights of H(H<0) minus the sum of the roots of n_-(H<0).
WeightVector kappa(const Representation& rep, const CartanElement& h);

bool trace_condition(const Representation& rep, const CartanElement& h);

struct RessayrePolicy {
  int trials = 2;
  std::uint64_t seed = 0;
  bool exact = false;  // symbolic confirmation of zero verdicts up to the cap
  std::size_t symbolic_cap = 12;
};

std::uint64_t candidate_seed(std::uint64_t global_seed, const CartanElement& h);

struct DeterminantDecision {
  bool nonzero = false;
  PitVerdict pit;
  bool symbolic_checked = false;
};

/// Determinant test of a trace-satisfying H under the policy.
DeterminantDecision decide_determinant(const Representation& rep, const CartanElement& h, const RessayrePolicy& policy);
bool is_ressayre(const Representation& rep, const CartanElement& h, const RessayrePolicy& policy);

/// Normal (H_1, ..., H_last + z 1) on R^{sum d_f} for SU factors and one scalar.
IntVec ambient_normal(const GroupData& g, const CartanElement& h);

struct LabeledHRep {
  ConeHRep cone;
  std::vector<CartanElement> labels;  // one per inequality
  std::size_t trivial_count = 0;      // leading Weyl-chamber inequalities
};

std::vector<CartanElement> weyl_chamber_inequalities(const GroupData& g);
/// Weyl-chamber inequalities followed by the given Ressayre elements; trace-balance equalities.
LabeledHRep compute_hrep(const Representation& rep, const std::vector<CartanElement>& ressayre);

}  // namespace momentcone
