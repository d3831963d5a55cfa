#pragma once

#include "momentcone/parallel.hpp"
#include "momentcone/polyhedral.hpp"
#include "momentcone/repmodel.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace momentcone {

/// Row-major a x b array holding 1..ab.
struct Tableau {
  int rows = 0;
  int cols = 0;
  std::vector<int> entries;
  int at(int i, int j) const { return entries[static_cast<std::size_t>(i * cols + j)]; }
};

bool is_standard(const Tableau& t);
void for_each_rectangular_tableau(int a, int b, const std::function<void(const Tableau&)>& visit);
std::vector<Tableau> rectangular_tableaux(int a, int b);

struct Cubicle {
  std::vector<std::pair<int, int>> order;  // (i, j) of H_A,i + H_B,j, largest first
  std::vector<IntVec> generators;          // primitive integer (H_A, H_B) concatenated
};

std::optional<Cubicle> cubicle_of(const Tableau& t);

struct ExtremalEdge {
  IntVec pair;   // primitive integer (H_A, H_B) concatenated
  IntVec key_a;  // a * x_A with x the coweight-primitive normalization
  IntVec key_b;  // b * x_B
};

ExtremalEdge make_edge(const IntVec& h_a, const IntVec& h_b);
bool edge_component_primitivity(const ExtremalEdge& e);

struct EdgeSet {
  int a = 0, b = 0;
  std::size_t tableaux = 0;
  std::size_t cubicles = 0;
  std::vector<ExtremalEdge> edges;
  std::size_t reduced = 0;  // up to swapping the two factors when a == b
};

EdgeSet extremal_edges(int a, int b, Exec exec = Exec::Parallel);

enum class Stage { EPlus, EPlusAdm, E };

struct CandidateSet {
  Stage stage = Stage::EPlus;
  std::vector<CartanElement> elements;  // sorted, primitive
  std::size_t reduced = 0;
};

/// Subsystem swaps among equal ranks; z stays fixed.
SymmetrySpec kronecker_symmetry(int a, int b, int c);
std::size_t count_up_to_perms(const std::vector<CartanElement>& hs, const SymmetrySpec& s);

/// E+ from the extremal edges of the three factor pairs.
CandidateSet tripartite_candidates(int a, int b, int c, Exec exec = Exec::Parallel);
CandidateSet tripartite_candidates(int a, int b, int c, const EdgeSet& ab, const EdgeSet& ac, const EdgeSet& bc,
                                   Exec exec = Exec::Parallel);

/// Coordinates of a weight against the Cartan basis e_m - e_{m+1} (SU), e_m (U), then the scalars.
IntVec weight_coordinates(const GroupData& g, const WeightVector& w);
bool is_admissible(const Representation& rep, const CartanElement& h);

std::vector<CartanElement> admissible_z(const Representation& rep, const CartanElement& triple);
CandidateSet admissible_candidates(const Representation& rep, const CandidateSet& eplus, Exec exec = Exec::Parallel);

/// All w.H0 whose shuffle lengths add up to dim H(H0 < 0); w = w0 o shuffle per factor.
std::vector<CartanElement> trace_filtered_orbit(const Representation& rep, const CartanElement& h0);
CandidateSet orbit_candidates(const Representation& rep, const CandidateSet& adm, Exec exec = Exec::Parallel);

/// {lambda_A dominant >= 0, lambda_B = (lambda_A, 0, ...)} in R^{a+b}.
ConeHRep bipartite_cone(int a, int b);

}  // namespace momentcone
