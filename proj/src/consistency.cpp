#include "symm/consistency.hpp"

#include <cmath>

namespace symm {

OrderReport consistency_order(const ConsistencyStudy& study) {
  OrderReport report;
  for (int lvl = 0; lvl < study.n_levels; ++lvl) {
    ConsistencyLevel level = study.level(lvl);
    double worst = 0.0;
    for (const auto& c : level.configs) {
      const double scale = level.scheme.de_scale ? std::abs(level.scheme.de_scale(c)) : 1.0;
      for (int k = 0; k < level.scheme.n_de; ++k)
        worst = std::max(worst, std::abs(level.scheme.residuals[k](c)) / scale);
    }
    report.steps.push_back(level.step);
    report.residuals.push_back(worst);
  }

  double floor = 0.0;
  for (double r : report.residuals) floor = std::max(floor, r);
  if (floor < 1e-13) {
    report.exact = true;
    return report;
  }

  // Least-squares slope of log residual against log step.
  const auto n = static_cast<double>(report.steps.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const double x = std::log(report.steps[i]);
    const double y = std::log(std::max(report.residuals[i], 1e-300));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  report.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return report;
}

CommuteReport check_commuting_diagram(const ConsistencyStudy& original,
                                      const ConsistencyStudy& transformed,
                                      double required_order, double slack) {
  CommuteReport report;
  report.original = consistency_order(original);
  report.transformed = consistency_order(transformed);
  report.min_order = required_order - slack;
  auto side_ok = [&](const OrderReport& r) { return r.exact || r.slope >= report.min_order; };
  report.pass = side_ok(report.original) && side_ok(report.transformed);
  return report;
}

// ---------------------------------------------------------------------------
// Studies
// ---------------------------------------------------------------------------

namespace {

constexpr double kBaseH = 0.16;
constexpr double kBaseTau = 0.04;

double heat_smooth(double x, double t) { return 2.0 + std::exp(-t) * std::sin(x); }

// Inverse of the monotone branch x in (-pi/2, pi/2).
double heat_smooth_inverse(double y, double t) { return std::asin((y - 2.0) * std::exp(t)); }

std::vector<double> base_points(double lo, double hi, int count) {
  std::vector<double> pts;
  for (int i = 0; i < count; ++i) pts.push_back(lo + (hi - lo) * (i + 0.5) / count);
  return pts;
}

}  // namespace

ConsistencyStudy heat_consistency_study() {
  ConsistencyStudy study;
  study.name = "heat";
  study.level = [](int lvl) {
    const double scale = std::pow(0.5, lvl);
    const double h = kBaseH * scale;
    const double tau = kBaseTau * scale;
    ConsistencyLevel level;
    level.step = scale;
    level.scheme = heat_scheme(tau);
    for (double t : {0.3, 0.7}) {
      for (double x : base_points(-0.9, 0.9, 4)) {
        const double u0 = heat_smooth(x, t);
        const double up = heat_smooth(x + h, t);
        const double um = heat_smooth(x - h, t);
        // Node drift from the mesh equation, value from the solution there.
        const double lp = std::log(up / u0), lm = std::log(um / u0);
        const double dxh = 2.0 * tau / (2.0 * h) * (lm - lp);
        level.configs.push_back(StencilConfig(
            level.scheme.tmpl,
            {{{x, t}, {u0}},
             {{x + h, t}, {up}},
             {{x - h, t}, {um}},
             {{x + dxh, t + tau}, {heat_smooth(x + dxh, t + tau)}}}));
      }
    }
    return level;
  };
  return study;
}

ConsistencyStudy nonlinear_heat_consistency_study() {
  ConsistencyStudy study;
  study.name = "nl-heat";
  study.level = [](int lvl) {
    const double scale = std::pow(0.5, lvl);
    const double h = 0.08 * scale;  // step in the new independent variable y
    const double tau = kBaseTau * scale;
    ConsistencyLevel level;
    level.step = scale;
    level.scheme = nonlinear_heat_scheme(tau);
    for (double t : {0.3, 0.5}) {
      for (double y : base_points(1.7, 2.3, 4)) {
        const double v0 = heat_smooth_inverse(y, t);
        const double vp = heat_smooth_inverse(y + h, t);
        const double vm = heat_smooth_inverse(y - h, t);
        // Value step from the scheme's explicit equation, lattice position
        // from the solution: the y where v(y, t+tau) equals the new value.
        const double dvp = vp - v0, dvm = v0 - vm;
        const double lp = std::log((y + h) / y), lm = std::log((y - h) / y);
        const double drift = 2.0 * tau / (dvp + dvm) * (dvp / dvm * lm - dvm / dvp * lp);
        const double v_new = v0 + drift;
        const double y_new = 2.0 + std::sin(v_new) * std::exp(-(t + tau));
        level.configs.push_back(StencilConfig(level.scheme.tmpl,
                                              {{{y, t}, {v0}},
                                               {{y + h, t}, {vp}},
                                               {{y - h, t}, {vm}},
                                               {{y_new, t + tau}, {v_new}}}));
      }
    }
    return level;
  };
  return study;
}

ConsistencyStudy standard_heat_consistency_study() {
  ConsistencyStudy study;
  study.name = "heat-standard";
  study.level = [](int lvl) {
    const double scale = std::pow(0.5, lvl);
    const double h = kBaseH * scale;
    const double tau = kBaseTau * scale;
    ConsistencyLevel level;
    level.step = scale;
    level.scheme = standard_heat_scheme(h, tau);
    for (double t : {0.3, 0.7}) {
      for (double x : base_points(-0.9, 0.9, 4)) {
        level.configs.push_back(
            StencilConfig(level.scheme.tmpl,
                          {{{x, t}, {heat_smooth(x, t)}},
                           {{x + h, t}, {heat_smooth(x + h, t)}},
                           {{x - h, t}, {heat_smooth(x - h, t)}},
                           {{x, t + tau}, {heat_smooth(x, t + tau)}}}));
      }
    }
    return level;
  };
  return study;
}

ConsistencyStudy heat_exact_family_study() {
  ConsistencyStudy study;
  study.name = "heat-exact";
  ExactSolution sol = heat_exponential_solution(0.1, 0.0, 1.0, 0.01, 1.0, 1.0);
  study.level = [sol](int lvl) {
    ConsistencyLevel level;
    level.step = std::pow(0.5, lvl);
    level.scheme = heat_scheme(0.01);
    for (long m = 0; m < 3; ++m) {
      for (long n = 1; n < 6; ++n) {
        level.configs.push_back(
            StencilConfig(level.scheme.tmpl, {sol.at(m, n), sol.at(m, n + 1),
                                              sol.at(m, n - 1), sol.at(m + 1, n)}));
      }
    }
    return level;
  };
  return study;
}

ConsistencyStudy wave_yz_consistency_study() {
  ConsistencyStudy study;
  study.name = "wave-yz";
  study.level = [](int lvl) {
    const double scale = std::pow(0.5, lvl);
    const double eps = 0.2 * scale;
    const double delta = 0.2 * scale;
    auto sol = [](double y, double z) { return std::exp(y + z); };
    ConsistencyLevel level;
    level.step = scale;
    level.scheme = wave_scheme_yz(named_scalar_fn("id"), eps, delta);
    for (double y : base_points(-0.5, 0.5, 3)) {
      for (double z : base_points(-0.5, 0.5, 3)) {
        level.configs.push_back(
            StencilConfig(level.scheme.tmpl,
                          {{{y, z}, {sol(y, z)}},
                           {{y + eps, z}, {sol(y + eps, z)}},
                           {{y - eps, z}, {sol(y - eps, z)}},
                           {{y, z + delta}, {sol(y, z + delta)}},
                           {{y, z - delta}, {sol(y, z - delta)}},
                           {{y + eps, z + delta}, {sol(y + eps, z + delta)}}}));
      }
    }
    return level;
  };
  return study;
}

ConsistencyStudy wave_xt_consistency_study() {
  ConsistencyStudy study;
  study.name = "wave-xt";
  ConsistencyStudy yz = wave_yz_consistency_study();
  study.level = [yz](int lvl) {
    ConsistencyLevel level = yz.level(lvl);
    level.scheme = wave_scheme_xt(named_scalar_fn("id"), 0.2 * level.step, 0.2 * level.step);
    for (auto& c : level.configs) {
      std::vector<SpacePoint> pts;
      for (std::size_t i = 0; i < c.size(); ++i) {
        SpacePoint pt = c.point(i);
        const double y = pt.x[0], z = pt.x[1];
        pt.x[0] = 0.5 * (y + z);
        pt.x[1] = 0.5 * (y - z);
        pts.push_back(pt);
      }
      c = StencilConfig(c.stencil_template(), std::move(pts));
    }
    return level;
  };
  return study;
}

ConsistencyStudy polar_consistency_study() {
  ConsistencyStudy study;
  study.name = "polar";
  study.level = [](int lvl) {
    const double scale = std::pow(0.5, lvl);
    const double eps = 0.1 * scale;
    const double delta = 0.1 * scale;
    auto sol = [](double r, double) { return r * r; };
    ConsistencyLevel level;
    level.step = scale;
    level.scheme = polar_laplace_scheme(named_source_fn("const:4"), eps, delta);
    for (double r : base_points(1.0, 2.0, 4)) {
      for (double th : base_points(0.0, 1.0, 2)) {
        level.configs.push_back(
            StencilConfig(level.scheme.tmpl, {{{r, th}, {sol(r, th)}},
                                              {{r + eps, th}, {sol(r + eps, th)}},
                                              {{r - eps, th}, {sol(r - eps, th)}},
                                              {{r, th + delta}, {sol(r, th + delta)}},
                                              {{r, th - delta}, {sol(r, th - delta)}}}));
      }
    }
    return level;
  };
  return study;
}

ConsistencyStudy consistency_study_by_id(const std::string& id) {
  if (id == "heat") return heat_consistency_study();
  if (id == "nl-heat") return nonlinear_heat_consistency_study();
  if (id == "heat-standard") return standard_heat_consistency_study();
  if (id == "heat-exact") return heat_exact_family_study();
  if (id == "wave-yz") return wave_yz_consistency_study();
  if (id == "wave-xt") return wave_xt_consistency_study();
  if (id == "polar") return polar_consistency_study();
  throw ConfigError("no consistency study for '" + id + "'");
}

}  // namespace symm
