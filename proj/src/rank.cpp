#include "symm/rank.hpp"

#include <cmath>

namespace symm {

Eigen::MatrixXd z_matrix(const SymmetryAlgebra& algebra, const StencilConfig& config) {
  const auto n = static_cast<Eigen::Index>(algebra.fields.size());
  Eigen::MatrixXd z(n, static_cast<Eigen::Index>(config.dim()));
  for (Eigen::Index k = 0; k < n; ++k) {
    Vec row = prolong(algebra.fields[k], config.stencil_template()).coefficients(config);
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(k, j) = row[j];
  }
  return z;
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double thresh = rel_tol * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

namespace {

// Finite-difference Jacobian of the constraint functions at a configuration.
Eigen::MatrixXd constraint_jacobian(const std::vector<ConfigFn>& constraints,
                                    const StencilConfig& config) {
  Vec flat = config.flatten();
  const auto& tmpl = config.stencil_template();
  const int p = config.p(), q = config.q();
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(constraints.size()),
                      static_cast<Eigen::Index>(flat.size()));
  for (std::size_t j = 0; j < flat.size(); ++j) {
    const double h = std::max(1e-7, 1e-7 * std::abs(flat[j]));
    const double saved = flat[j];
    flat[j] = saved + h;
    StencilConfig cp = StencilConfig::unflatten(tmpl, p, q, flat);
    flat[j] = saved - h;
    StencilConfig cm = StencilConfig::unflatten(tmpl, p, q, flat);
    flat[j] = saved;
    for (std::size_t i = 0; i < constraints.size(); ++i)
      jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (constraints[i](cp) - constraints[i](cm)) / (2.0 * h);
  }
  return jac;
}

}  // namespace

RankReport invariant_count(const SymmetryAlgebra& algebra, const ConfigSampler& sampler,
                           int n_samples, Rng& rng) {
  RankReport report;
  for (int i = 0; i < n_samples; ++i) {
    StencilConfig c = sampler.draw(rng);
    if (i == 0) report.dim_flat = static_cast<int>(c.dim());
    if (!sampler.constraints.empty())
      report.n_constraints =
          std::max(report.n_constraints, numerical_rank(constraint_jacobian(sampler.constraints, c)));
    const int r = algebra.fields.empty() ? 0 : numerical_rank(z_matrix(algebra, c));
    report.sample_ranks.push_back(r);
    report.rank = std::max(report.rank, r);
  }
  for (int r : report.sample_ranks) report.stable = report.stable && (r == report.rank);
  report.dim_manifold = report.dim_flat - report.n_constraints;
  report.mu = report.dim_manifold - report.rank;
  return report;
}

}  // namespace symm
