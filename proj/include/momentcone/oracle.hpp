#pragma once

#include "momentcone/parallel.hpp"
#include "momentcone/repmodel.hpp"

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <vector>

namespace momentcone {

/// Every primitive H (both orientations) whose orthogonal weights span a hyperplane.
/// Refuses representations with more than max_dim weights (throws std::length_error).
std::vector<CartanElement> brute_admissible(const Representation& rep, std::size_t max_dim = 16);

/// Sorts each factor part non-increasingly; scalars unchanged.
CartanElement dominant_form(const CartanElement& h);
/// The smaller of dominant_form(h) and dominant_form(-h).
CartanElement unoriented_dominant(const CartanElement& h);

/// Non-increasing local spectra of one pure state.
struct SpectraSample {
  std::array<std::vector<double>, 3> spectra;
};

/// Haar-random unit vectors in C^a x C^b x C^c; sample i only depends on (seed, i).
std::vector<SpectraSample> sample_spectra(int a, int b, int c, std::size_t n, std::uint64_t seed,
                                          Exec exec = Exec::Parallel);

/// Ascending eigenvalues and eigenvectors of a Hermitian matrix.
struct HermitianEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};
HermitianEigen hermitian_eigen(const Eigen::MatrixXcd& m);

struct SampleCheck {
  std::size_t samples = 0;
  std::size_t violations = 0;  // (sample, inequality) pairs below -tolerance
  double worst = 0;            // smallest normal . spectra seen, 0 without normals
};

/// Evaluates ambient normals on (spec_A, spec_B, spec_C).
SampleCheck check_samples(const std::vector<IntVec>& normals, const std::vector<SpectraSample>& samples,
                          double tolerance = 1e-9, Exec exec = Exec::Parallel);

struct TripleSearch {
  bool found = false;  // false is inconclusive
  double residual = 0;
  std::size_t iterations = 0;
  std::array<Eigen::MatrixXcd, 3> matrices;
};

/// Hermitian A + B + C = 0 with the given spectra: a diagonal witness if one exists, else alternating projections.
TripleSearch random_hermitian_triple(int d, const std::array<std::vector<double>, 3>& spectra, std::size_t iters,
                                     std::uint64_t seed, double tolerance = 1e-9);

}  // namespace momentcone
