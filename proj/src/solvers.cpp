#include "symm/solvers.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "symm/flow.hpp"

namespace symm {

namespace {

struct LayerNeighbours {
  double dxp, dxm, lp, lm;  // steps and log ratios around one interior node
};

LayerNeighbours read_neighbours(const SpacePoint& prev, const SpacePoint& mid,
                                const SpacePoint& next, bool hodograph_roles) {
  LayerNeighbours nb;
  if (!hodograph_roles) {
    nb.dxp = next.x[0] - mid.x[0];
    nb.dxm = mid.x[0] - prev.x[0];
    if (!(mid.u[0] > 0 && next.u[0] > 0 && prev.u[0] > 0))
      throw DomainViolation("layer values must stay positive");
    nb.lp = std::log(next.u[0] / mid.u[0]);
    nb.lm = std::log(prev.u[0] / mid.u[0]);
  } else {
    nb.dxp = next.u[0] - mid.u[0];
    nb.dxm = mid.u[0] - prev.u[0];
    if (!(mid.x[0] > 0 && next.x[0] > 0 && prev.x[0] > 0))
      throw DomainViolation("lattice positions must stay positive");
    nb.lp = std::log(next.x[0] / mid.x[0]);
    nb.lm = std::log(prev.x[0] / mid.x[0]);
  }
  if (nb.dxp == 0 || nb.dxm == 0) throw DomainViolation("degenerate layer step");
  return nb;
}

// One interior-node update; throws StepTooLarge when the ratio equation has
// no positive-branch solution at this tau.
SpacePoint advance_node(const SpacePoint& prev, const SpacePoint& mid, const SpacePoint& next,
                        double tau, bool hodograph_roles) {
  const auto nb = read_neighbours(prev, mid, next, hodograph_roles);
  const double span = nb.dxp + nb.dxm;
  const double drift = 2.0 * tau / span * (nb.dxp / nb.dxm * nb.lm - nb.dxm / nb.dxp * nb.lp);
  const double rhs = 1.0 - 4.0 * tau / span * (nb.lp / nb.dxp + nb.lm / nb.dxm);
  if (!(rhs > 0)) throw StepTooLarge("ratio equation unsolvable at tau=" + std::to_string(tau));
  const double shrink = std::exp(-drift * drift / (4.0 * tau)) / std::sqrt(rhs);
  SpacePoint out = mid;
  out.x[1] = mid.x[1] + tau;
  if (!hodograph_roles) {
    out.x[0] = mid.x[0] + drift;
    out.u[0] = mid.u[0] * shrink;
  } else {
    out.u[0] = mid.u[0] + drift;
    out.x[0] = mid.x[0] * shrink;
  }
  return out;
}

MarchState advance_layer_impl(const MarchState& state, bool hodograph_roles) {
  if (state.layer.size() < 3) throw DomainViolation("layer needs at least 3 points");
  double tau = state.tau;
  int halvings = state.halvings;

  for (;;) {
    try {
      MarchState next = state;
      next.tau = tau;
      next.halvings = halvings;
      next.m = state.m + 1;
      const long n_end = static_cast<long>(state.layer.size()) - 1;

      for (long n = 1; n < n_end; ++n)
        next.layer[n] = advance_node(state.layer[n - 1], state.layer[n], state.layer[n + 1],
                                     tau, hodograph_roles);

      for (long n : {0L, n_end}) {
        switch (state.boundary.kind) {
          case BoundaryPolicy::Kind::ExactTrace:
            next.layer[n] = state.boundary.trace(next.m, n);
            break;
          case BoundaryPolicy::Kind::FixedValue: {
            SpacePoint pt = state.layer[n];
            pt.x[1] += tau;
            pt.u[0] = state.boundary.fixed_value;
            next.layer[n] = pt;
            break;
          }
          case BoundaryPolicy::Kind::CopyStep: {
            // Nearest interior node donates its drift (additive for the
            // lattice coordinate, multiplicative for the positive quantity).
            const long adj = n == 0 ? 1 : n_end - 1;
            SpacePoint pt = state.layer[n];
            pt.x[1] += tau;
            if (!hodograph_roles) {
              pt.x[0] += next.layer[adj].x[0] - state.layer[adj].x[0];
              pt.u[0] *= next.layer[adj].u[0] / state.layer[adj].u[0];
            } else {
              pt.u[0] += next.layer[adj].u[0] - state.layer[adj].u[0];
              pt.x[0] *= next.layer[adj].x[0] / state.layer[adj].x[0];
            }
            next.layer[n] = pt;
            break;
          }
        }
      }

      const double dir = state.layer[1].x[0] > state.layer[0].x[0] ? 1.0 : -1.0;
      for (std::size_t n = 1; n < next.layer.size(); ++n)
        if (!(dir * (next.layer[n].x[0] - next.layer[n - 1].x[0]) > 0))
          throw MeshTangled("advanced layer lost monotonicity at n=" + std::to_string(n));
      return next;
    } catch (const StepTooLarge&) {
      if (halvings >= 4) throw;
      tau *= 0.5;
      ++halvings;
    }
  }
}

}  // namespace

SolutionGrid march_ode(const Scheme& scheme, double x0, double u0, long n_steps) {
  SolutionGrid grid(1, 1);
  SpacePoint current{{x0}, {u0}};
  grid.append_row({current});
  const double eps_guess = scheme.params.count("eps") ? scheme.params.at("eps") : 0.1;

  for (long m = 0; m < n_steps; ++m) {
    // Unknowns: the next point's (x, u).  Residuals E1, E2 at the pair.
    Eigen::Vector2d w(current.x[0] + eps_guess, current.u[0]);
    auto residual_at = [&](const Eigen::Vector2d& z) {
      StencilConfig c(scheme.tmpl, {current, SpacePoint{{z(0)}, {z(1)}}});
      return Eigen::Vector2d(scheme.residuals[0](c), scheme.residuals[1](c));
    };
    bool ok = false;
    for (int it = 0; it < 50; ++it) {
      Eigen::Vector2d f = residual_at(w);
      if (f.cwiseAbs().maxCoeff() < 1e-14) {
        ok = true;
        break;
      }
      Eigen::Matrix2d jac;
      for (int j = 0; j < 2; ++j) {
        const double h = std::max(1e-7, 1e-7 * std::abs(w(j)));
        Eigen::Vector2d wp = w, wm = w;
        wp(j) += h;
        wm(j) -= h;
        jac.col(j) = (residual_at(wp) - residual_at(wm)) / (2.0 * h);
      }
      w -= jac.fullPivLu().solve(f);
    }
    if (!ok && residual_at(w).cwiseAbs().maxCoeff() > 1e-12)
      throw RootFindFailed("ODE step " + std::to_string(m) + " did not converge");
    current = SpacePoint{{w(0)}, {w(1)}};
    grid.append_row({current});
  }
  return grid;
}

MarchState advance_heat_layer(const MarchState& state) {
  return advance_layer_impl(state, false);
}

MarchState advance_nonlinear_heat_layer(const MarchState& state) {
  return advance_layer_impl(state, true);
}

SolutionGrid march_heat(const MarchState& initial, long n_steps, bool hodograph_roles) {
  SolutionGrid grid(2, 1, /*flat_rows=*/true);
  grid.append_row(initial.layer);
  MarchState state = initial;
  for (long s = 0; s < n_steps; ++s) {
    state = advance_layer_impl(state, hodograph_roles);
    grid.append_row(state.layer);
  }
  grid.validate();
  return grid;
}

SolutionGrid march_wave(const Scheme& scheme, const std::vector<double>& row0,
                        const std::vector<double>& col0, double eps, double delta, double y0,
                        double z0) {
  if (row0.empty() || col0.empty() || std::abs(row0[0] - col0[0]) > 1e-12)
    throw ConfigError("wave march needs initial lines sharing the corner value");
  const long n_cols = static_cast<long>(row0.size());
  const long n_rows = static_cast<long>(col0.size());

  std::vector<std::vector<double>> u(n_rows, std::vector<double>(n_cols, 0.0));
  u[0] = row0;
  for (long m = 0; m < n_rows; ++m) u[m][0] = col0[m];

  auto point = [&](long m, long n) {
    return SpacePoint{{y0 + eps * n, z0 + delta * m}, {u[m][n]}};
  };

  // Fill the quadrant: the scheme's equation is affine in the corner value.
  for (long m = 0; m + 1 < n_rows; ++m) {
    for (long n = 0; n + 1 < n_cols; ++n) {
      auto corner_residual = [&](double w) {
        u[m + 1][n + 1] = w;
        StencilConfig c(
            scheme.tmpl,
            {point(m, n), point(m, n + 1),
             n > 0 ? point(m, n - 1) : SpacePoint{{y0 - eps, z0 + delta * m}, {u[m][n]}},
             point(m + 1, n),
             m > 0 ? point(m - 1, n) : SpacePoint{{y0 + eps * n, z0 - delta}, {u[m][n]}},
             point(m + 1, n + 1)});
        return scheme.residuals[0](c);
      };
      const double f0 = corner_residual(0.0);
      const double f1 = corner_residual(1.0);
      u[m + 1][n + 1] = -f0 / (f1 - f0);
    }
  }

  SolutionGrid grid(2, 1);
  for (long m = 0; m < n_rows; ++m) {
    std::vector<SpacePoint> row;
    row.reserve(n_cols);
    for (long n = 0; n < n_cols; ++n) row.push_back(point(m, n));
    grid.append_row(std::move(row));
  }
  grid.validate();
  return grid;
}

SolutionGrid wave_grid_to_xt(const SolutionGrid& yz) {
  SolutionGrid grid(2, 1);
  for (std::size_t m = 0; m < yz.rows(); ++m) {
    std::vector<SpacePoint> row;
    row.reserve(yz.cols(m));
    for (std::size_t n = 0; n < yz.cols(m); ++n) {
      SpacePoint pt = yz.at(m, n);
      const double y = pt.x[0], z = pt.x[1];
      pt.x[0] = 0.5 * (y + z);
      pt.x[1] = 0.5 * (y - z);
      row.push_back(pt);
    }
    grid.append_row(std::move(row));
  }
  grid.validate();
  return grid;
}

EllipticResult solve_elliptic(const Scheme& scheme, const AnnulusSpec& annulus,
                              const std::function<double(double)>& inner_data,
                              const std::function<double(double)>& outer_data, int max_sweeps,
                              double tol) {
  const double eps = scheme.params.at("eps");
  const double delta = scheme.params.at("delta");
  const int M = annulus.n_theta;
  const int N = annulus.n_r;
  if (scheme.name != "polar") throw ConfigError("elliptic solver works in the polar chart");
  if (annulus.periodic && std::abs(delta * M - 2.0 * M_PI) > 1e-9)
    throw DomainViolation("periodic annulus needs delta = 2*pi / n_theta");
  if (!(annulus.r0 > 0)) throw DomainViolation("annulus must have r0 > 0");

  auto r_of = [&](int n) { return annulus.r0 + eps * n; };
  auto theta_of = [&](int m) { return annulus.theta0 + delta * m; };

  // Recover the (lagged) source from the scheme's equation: on a constant
  // field every difference quotient vanishes, so E1 = -F(u, r).
  auto F = [&](double u, double r) {
    StencilConfig c(scheme.tmpl, {{{r, 0.0}, {u}},
                                  {{r + eps, 0.0}, {u}},
                                  {{r - eps, 0.0}, {u}},
                                  {{r, delta}, {u}},
                                  {{r, -delta}, {u}}});
    return -scheme.residuals[0](c);
  };

  std::vector<std::vector<double>> u(M, std::vector<double>(N + 1, 0.0));
  std::vector<std::vector<double>> u_lag = u;
  const double log_span = std::log(r_of(N) / r_of(0));
  for (int m = 0; m < M; ++m) {
    const double gi = inner_data(theta_of(m));
    const double go = outer_data(theta_of(m));
    for (int n = 0; n <= N; ++n) {
      const double w = std::log(r_of(n) / r_of(0)) / log_span;
      u[m][n] = gi + w * (go - gi);
    }
  }

  auto sweep_node = [&](int m, int n) {
    const double r = r_of(n);
    const double up = u[m][n + 1];
    const double um = u[m][n - 1];
    const double uh = u[(m + 1) % M][n];
    const double uc = u[(m - 1 + M) % M][n];
    const double ct = 1.0 / (r * r * delta * delta);
    const double diag = -2.0 / (eps * eps) - 1.0 / (r * eps) - 2.0 * ct;
    const double off = up * (1.0 / (eps * eps) + 1.0 / (r * eps)) + um / (eps * eps) +
                       (uh + uc) * ct;
    const double fresh = (F(u_lag[m][n], r) - off) / diag;
    const double change = std::abs(fresh - u[m][n]);
    u[m][n] = fresh;
    return change;
  };

  EllipticResult result;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    u_lag = u;
    double update = 0.0;
    for (int m = 0; m < M; ++m)
      for (int n = 1; n < N; ++n) update = std::max(update, sweep_node(m, n));
    for (int m = M - 1; m >= 0; --m)
      for (int n = N - 1; n >= 1; --n) update = std::max(update, sweep_node(m, n));
    result.sweeps = sweep;
    result.final_update = update;
    if (update < tol) {
      result.converged = true;
      break;
    }
  }
  if (!result.converged)
    throw NotConverged("elliptic solve: update " + std::to_string(result.final_update) +
                       " after " + std::to_string(result.sweeps) + " sweeps");

  // Diagonally scaled residual at every interior node.
  for (int m = 0; m < M; ++m) {
    for (int n = 1; n < N; ++n) {
      const double r = r_of(n);
      const double ct = 1.0 / (r * r * delta * delta);
      const double diag = -2.0 / (eps * eps) - 1.0 / (r * eps) - 2.0 * ct;
      const double res = (u[m][n + 1] - 2.0 * u[m][n] + u[m][n - 1]) / (eps * eps) +
                         (u[m][n + 1] - u[m][n]) / (r * eps) +
                         (u[(m + 1) % M][n] - 2.0 * u[m][n] + u[(m - 1 + M) % M][n]) * ct -
                         F(u[m][n], r);
      result.scaled_residual = std::max(result.scaled_residual, std::abs(res / diag));
    }
  }

  result.grid = SolutionGrid(2, 1, /*flat_rows=*/true);
  for (int m = 0; m < M; ++m) {
    std::vector<SpacePoint> row;
    row.reserve(N + 1);
    for (int n = 0; n <= N; ++n) row.push_back({{r_of(n), theta_of(m)}, {u[m][n]}});
    result.grid.append_row(std::move(row));
  }
  result.grid.validate();
  return result;
}

std::vector<SpacePoint> flow_layer(const VectorField& v, const std::vector<SpacePoint>& layer,
                                   double eps) {
  std::vector<SpacePoint> out;
  out.reserve(layer.size());
  for (const auto& pt : layer) out.push_back(flow(v, pt, eps));
  return out;
}

}  // namespace symm
