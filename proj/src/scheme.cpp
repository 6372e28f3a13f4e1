#include "symm/scheme.hpp"

#include <cmath>

namespace symm {

Vec residuals(const Scheme& scheme, const StencilConfig& config) {
  Vec out;
  out.reserve(scheme.residuals.size());
  for (const auto& r : scheme.residuals) out.push_back(r(config));
  return out;
}

double max_abs_residual(const Scheme& scheme, const StencilConfig& config) {
  double m = 0.0;
  for (double r : residuals(scheme, config)) m = std::max(m, std::abs(r));
  return m;
}

SolutionGrid sample_solution(const ExactSolution& sol, long m_count, long n_count,
                             bool flat_rows) {
  SolutionGrid grid(sol.p, sol.q, flat_rows);
  for (long m = 0; m < m_count; ++m) {
    std::vector<SpacePoint> row;
    row.reserve(static_cast<std::size_t>(n_count));
    for (long n = 0; n < n_count; ++n) row.push_back(sol.at(m, n));
    grid.append_row(std::move(row));
  }
  grid.validate();
  return grid;
}

double max_residual_on_grid(const Scheme& scheme, const SolutionGrid& grid) {
  double worst = 0.0;
  for (long m = 0; m < static_cast<long>(grid.rows()); ++m) {
    for (long n = 0; n < static_cast<long>(grid.cols(static_cast<std::size_t>(m))); ++n) {
      StencilConfig c;
      try {
        c = build_stencil(grid, m, n, scheme.tmpl);
      } catch (const MissingNeighbor&) {
        continue;
      }
      worst = std::max(worst, max_abs_residual(scheme, c));
    }
  }
  return worst;
}

}  // namespace symm
