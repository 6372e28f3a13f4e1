#pragma once

#include <Eigen/Dense>

#include "symm/invariance.hpp"

namespace symm {

// Matrix of prolonged generator coefficients: one row per algebra field,
// columns in flattened-configuration order.
Eigen::MatrixXd z_matrix(const SymmetryAlgebra& algebra, const StencilConfig& config);

struct RankReport {
  int dim_flat = 0;        // (p+q) * #J
  int n_constraints = 0;   // numerical rank of the manifold constraint Jacobian
  int dim_manifold = 0;    // dim_flat - n_constraints
  int rank = 0;            // max rank of Z over samples
  int mu = 0;              // dim_manifold - rank
  bool stable = true;      // rank identical across all samples
  std::vector<int> sample_ranks;
};

// Number of functionally independent difference invariants,
// mu = dim M - rank Z, with dim M reduced by the sampler's constraints and
// rank taken as the maximum numerical rank over the sampled configurations
// (singular values above 1e-9 * sigma_max).  An unstable rank is reported,
// not guessed away.
RankReport invariant_count(const SymmetryAlgebra& algebra, const ConfigSampler& sampler,
                           int n_samples, Rng& rng);

// Numerical rank with the relative threshold used throughout.
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-9);

}  // namespace symm
