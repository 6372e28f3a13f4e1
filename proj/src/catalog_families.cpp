#include <cmath>

#include "symm/catalog.hpp"

namespace symm {

namespace {

Offset off(std::vector<int> e) { return Offset{std::move(e)}; }

// Positive dependent values are required wherever logarithms of ratios are
// taken; steps must be nonzero for the ratio and kernel expressions.
void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw DomainViolation(std::string(what) + " must be positive");
}

void require_nonzero(double v, const char* what) {
  if (v == 0.0) throw DomainViolation(std::string(what) + " vanishes");
}

}  // namespace

StencilTemplate ode_template() {
  return StencilTemplate({off({0}), off({1})}, {"0", "+"});
}

StencilTemplate heat_template() {
  return StencilTemplate({off({0, 0}), off({0, 1}), off({0, -1}), off({1, 0})},
                         {"0", "+", "-", "hat"});
}

StencilTemplate wave_template() {
  return StencilTemplate(
      {off({0, 0}), off({0, 1}), off({0, -1}), off({1, 0}), off({-1, 0}), off({1, 1})},
      {"0", "+", "-", "hat", "check", "hat+"});
}

StencilTemplate polar_template() {
  return StencilTemplate({off({0, 0}), off({0, 1}), off({0, -1}), off({1, 0}), off({-1, 0})},
                         {"0", "+", "-", "hat", "check"});
}

SymmetryAlgebra linear_ode_algebra(const ScalarFn& A, const ScalarFn& B) {
  SymmetryAlgebra a{1, 1, {}};
  a.fields.push_back({"V1",
                      [](const Vec&, const Vec&) { return Vec{0.0}; },
                      [A](const Vec& x, const Vec&) { return Vec{std::exp(A(x[0]))}; }});
  a.fields.push_back({"V2",
                      [](const Vec&, const Vec&) { return Vec{0.0}; },
                      [A, B](const Vec& x, const Vec& u) {
                        return Vec{u[0] - B(x[0]) * std::exp(A(x[0]))};
                      }});
  return a;
}

SymmetryAlgebra nonlinear_ode_algebra(const ScalarFn& A, const ScalarFn& B) {
  SymmetryAlgebra a{1, 1, {}};
  a.fields.push_back({"V1",
                      [A](const Vec&, const Vec& u) { return Vec{std::exp(A(u[0]))}; },
                      [](const Vec&, const Vec&) { return Vec{0.0}; }});
  a.fields.push_back({"V2",
                      [A, B](const Vec& x, const Vec& u) {
                        return Vec{x[0] - B(u[0]) * std::exp(A(u[0]))};
                      },
                      [](const Vec&, const Vec&) { return Vec{0.0}; }});
  return a;
}

SymmetryAlgebra heat_algebra() {
  SymmetryAlgebra a{2, 1, {}};
  auto zero_phi = [](const Vec&, const Vec&) { return Vec{0.0}; };
  a.fields.push_back({"V1", [](const Vec&, const Vec&) { return Vec{1.0, 0.0}; }, zero_phi});
  a.fields.push_back({"V2", [](const Vec&, const Vec&) { return Vec{0.0, 1.0}; }, zero_phi});
  a.fields.push_back({"V3", [](const Vec&, const Vec&) { return Vec{0.0, 0.0}; },
                      [](const Vec&, const Vec& u) { return Vec{u[0]}; }});
  a.fields.push_back({"V4", [](const Vec& x, const Vec&) { return Vec{x[0], 2.0 * x[1]}; },
                      zero_phi});
  a.fields.push_back({"V5", [](const Vec& x, const Vec&) { return Vec{2.0 * x[1], 0.0}; },
                      [](const Vec& x, const Vec& u) { return Vec{-x[0] * u[0]}; }});
  a.fields.push_back(
      {"V6",
       [](const Vec& x, const Vec&) { return Vec{4.0 * x[1] * x[0], 4.0 * x[1] * x[1]}; },
       [](const Vec& x, const Vec& u) { return Vec{-(x[0] * x[0] + 2.0 * x[1]) * u[0]}; }});
  return a;
}

SymmetryAlgebra nonlinear_heat_algebra() {
  // Coordinates: independent (y, t), dependent v.
  SymmetryAlgebra a{2, 1, {}};
  auto zero_xi = [](const Vec&, const Vec&) { return Vec{0.0, 0.0}; };
  auto zero_phi = [](const Vec&, const Vec&) { return Vec{0.0}; };
  a.fields.push_back({"V1", zero_xi, [](const Vec&, const Vec&) { return Vec{1.0}; }});
  a.fields.push_back({"V2", [](const Vec&, const Vec&) { return Vec{0.0, 1.0}; }, zero_phi});
  a.fields.push_back({"V3", [](const Vec& x, const Vec&) { return Vec{x[0], 0.0}; }, zero_phi});
  a.fields.push_back({"V4", [](const Vec& x, const Vec&) { return Vec{0.0, 2.0 * x[1]}; },
                      [](const Vec&, const Vec& u) { return Vec{u[0]}; }});
  a.fields.push_back({"V5",
                      [](const Vec& x, const Vec& u) { return Vec{-u[0] * x[0], 0.0}; },
                      [](const Vec& x, const Vec&) { return Vec{2.0 * x[1]}; }});
  a.fields.push_back({"V6",
                      [](const Vec& x, const Vec& u) {
                        return Vec{-(u[0] * u[0] + 2.0 * x[1]) * x[0], 4.0 * x[1] * x[1]};
                      },
                      [](const Vec& x, const Vec& u) { return Vec{4.0 * x[1] * u[0]}; }});
  return a;
}

SymmetryAlgebra wave_algebra_xt() {
  SymmetryAlgebra a{2, 1, {}};
  auto zero_phi = [](const Vec&, const Vec&) { return Vec{0.0}; };
  a.fields.push_back({"V1", [](const Vec& x, const Vec&) { return Vec{x[1], x[0]}; },
                      zero_phi});
  a.fields.push_back({"V2", [](const Vec&, const Vec&) { return Vec{1.0, 0.0}; }, zero_phi});
  a.fields.push_back({"V3", [](const Vec&, const Vec&) { return Vec{0.0, 1.0}; }, zero_phi});
  return a;
}

SymmetryAlgebra wave_algebra_yz() {
  SymmetryAlgebra a{2, 1, {}};
  auto zero_phi = [](const Vec&, const Vec&) { return Vec{0.0}; };
  a.fields.push_back({"V1", [](const Vec& x, const Vec&) { return Vec{x[0], -x[1]}; },
                      zero_phi});
  a.fields.push_back({"V2", [](const Vec&, const Vec&) { return Vec{1.0, 0.0}; }, zero_phi});
  a.fields.push_back({"V3", [](const Vec&, const Vec&) { return Vec{0.0, 1.0}; }, zero_phi});
  return a;
}

SymmetryAlgebra rotation_algebra() {
  SymmetryAlgebra a{2, 1, {}};
  a.fields.push_back({"V", [](const Vec& x, const Vec&) { return Vec{-x[1], x[0]}; },
                      [](const Vec&, const Vec&) { return Vec{0.0}; }});
  return a;
}

SymmetryAlgebra theta_translation_algebra() {
  SymmetryAlgebra a{2, 1, {}};
  a.fields.push_back({"V", [](const Vec&, const Vec&) { return Vec{0.0, 1.0}; },
                      [](const Vec&, const Vec&) { return Vec{0.0}; }});
  return a;
}

// ---------------------------------------------------------------------------
// Invariant families
// ---------------------------------------------------------------------------

InvariantFamily linear_ode_invariants(const ScalarFn& A, const ScalarFn& B) {
  InvariantFamily fam;
  fam.name = "linear-ode";
  fam.p = 1;
  fam.q = 1;
  fam.tmpl = ode_template();
  fam.algebra = linear_ode_algebra(A, B);
  fam.members = {{"I1", [](const StencilConfig& c) { return c.x("0"); }},
                 {"I2", [](const StencilConfig& c) { return c.x("+"); }}};
  ConfigFn manifold = [A, B](const StencilConfig& c) {
    return c.u("+") * std::exp(-A(c.x("+"))) - c.u("0") * std::exp(-A(c.x("0"))) -
           B(c.x("+")) + B(c.x("0"));
  };
  fam.manifold = {manifold};
  fam.declared_mu = 2;

  ConfigSampler s;
  s.tmpl = fam.tmpl;
  s.p = 1;
  s.q = 1;
  // On-manifold by construction: u+ solved from the weakly invariant relation.
  s.draw = [A, B, tmpl = fam.tmpl](Rng& rng) {
    const double x0 = rng.uniform(-1.0, 1.0);
    const double xp = x0 + rng.uniform(0.2, 1.0);
    const double u0 = rng.uniform(-2.0, 2.0);
    const double up = (u0 * std::exp(-A(x0)) + B(xp) - B(x0)) * std::exp(A(xp));
    return StencilConfig(tmpl, {{{x0}, {u0}}, {{xp}, {up}}});
  };
  fam.sampler = s;
  return fam;
}

ConfigSampler linear_ode_generic_sampler() {
  ConfigSampler s;
  s.tmpl = ode_template();
  s.p = 1;
  s.q = 1;
  s.draw = [tmpl = s.tmpl](Rng& rng) {
    const double x0 = rng.uniform(-1.0, 1.0);
    const double xp = x0 + rng.uniform(0.2, 1.0);
    return StencilConfig(
        tmpl, {{{x0}, {rng.uniform(-2.0, 2.0)}}, {{xp}, {rng.uniform(-2.0, 2.0)}}});
  };
  return s;
}

namespace {

// Flat-time-layer sampler for the four-point parabolic stencils.  Ranges keep
// all projective flows (eps up to +-0.2) inside the domain and, for scheme
// manifolds, the explicit update solvable on the positive branch.
ConfigSampler heat_layer_sampler(bool tight_values) {
  ConfigSampler s;
  s.tmpl = heat_template();
  s.p = 2;
  s.q = 1;
  s.constraints = {
      [](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); },
      [](const StencilConfig& c) { return c.x("0", 1) - c.x("-", 1); },
  };
  const double lo = tight_values ? 0.9 : 0.8;
  const double hi = tight_values ? 1.11 : 1.25;
  s.draw = [lo, hi, tmpl = s.tmpl](Rng& rng) {
    const double t = rng.uniform(0.3, 0.8);
    const double th = t + rng.uniform(0.1, 0.25);
    const double x0 = rng.uniform(-1.0, 1.0);
    const double xp = x0 + rng.uniform(0.5, 1.0);
    const double xm = x0 - rng.uniform(0.5, 1.0);
    const double xh = x0 + rng.uniform(-0.4, 0.4);
    auto val = [&] { return rng.uniform(lo, hi); };
    return StencilConfig(tmpl, {{{x0, t}, {val()}},
                                {{xp, t}, {val()}},
                                {{xm, t}, {val()}},
                                {{xh, th}, {val()}}});
  };
  return s;
}

}  // namespace

InvariantFamily heat_invariants() {
  InvariantFamily fam;
  fam.name = "heat";
  fam.p = 2;
  fam.q = 1;
  fam.tmpl = heat_template();
  fam.algebra = heat_algebra();
  fam.declared_mu = 4;

  auto guard = [](const StencilConfig& c, double dxp, double dxm, double dth) {
    require_positive(c.u("0"), "u");
    require_positive(c.u("+"), "u+");
    require_positive(c.u("-"), "u-");
    require_positive(c.u("hat"), "u hat");
    require_positive(dxp, "dx+");
    require_positive(dxm, "dx-");
    require_positive(dth, "dt hat");
  };

  fam.members.push_back({"I1", [guard](const StencilConfig& c) {
                           const double dxp = c.x("+") - c.x("0");
                           const double dxm = c.x("0") - c.x("-");
                           guard(c, dxp, dxm, c.x("hat", 1) - c.x("0", 1));
                           return dxp / dxm;
                         }});
  fam.members.push_back({"I2", [guard](const StencilConfig& c) {
                           const double dxp = c.x("+") - c.x("0");
                           const double dxm = c.x("0") - c.x("-");
                           const double dxh = c.x("hat") - c.x("0");
                           const double dth = c.x("hat", 1) - c.x("0", 1);
                           guard(c, dxp, dxm, dth);
                           const double ratio = c.u("0") / c.u("hat");
                           return dxp * dxp / dth * ratio * ratio *
                                  std::exp(-dxh * dxh / (2.0 * dth));
                         }});
  fam.members.push_back({"I3", [guard](const StencilConfig& c) {
                           const double dxp = c.x("+") - c.x("0");
                           const double dxm = c.x("0") - c.x("-");
                           const double dth = c.x("hat", 1) - c.x("0", 1);
                           guard(c, dxp, dxm, dth);
                           const double lp = std::log(c.u("+") / c.u("0"));
                           const double lm = std::log(c.u("-") / c.u("0"));
                           return dxp * dxp / (4.0 * dth) -
                                  dxp * dxp / (dxp + dxm) * (lp / dxp + lm / dxm);
                         }});
  fam.members.push_back({"I4", [guard](const StencilConfig& c) {
                           const double dxp = c.x("+") - c.x("0");
                           const double dxm = c.x("0") - c.x("-");
                           const double dxh = c.x("hat") - c.x("0");
                           const double dth = c.x("hat", 1) - c.x("0", 1);
                           guard(c, dxp, dxm, dth);
                           const double lp = std::log(c.u("+") / c.u("0"));
                           const double lm = std::log(c.u("-") / c.u("0"));
                           return dxp * dxh / dth +
                                  2.0 * dxp / (dxp + dxm) * (dxm / dxp * lp - dxp / dxm * lm);
                         }});

  fam.manifold = {[](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); },
                  [](const StencilConfig& c) { return c.x("0", 1) - c.x("-", 1); }};
  fam.sampler = heat_layer_sampler(false);
  return fam;
}

InvariantFamily nonlinear_heat_invariants() {
  // Hodograph image of the heat family: independent (y, t), dependent v.
  InvariantFamily fam;
  fam.name = "nl-heat";
  fam.p = 2;
  fam.q = 1;
  fam.tmpl = heat_template();
  fam.algebra = nonlinear_heat_algebra();
  fam.declared_mu = 4;

  auto guard = [](const StencilConfig& c) {
    require_positive(c.x("0"), "y");
    require_positive(c.x("+"), "y+");
    require_positive(c.x("-"), "y-");
    require_positive(c.x("hat"), "y hat");
    require_nonzero(c.u("+") - c.u("0"), "v+ - v");
    require_nonzero(c.u("0") - c.u("-"), "v - v-");
    require_nonzero(c.x("hat", 1) - c.x("0", 1), "dt hat");
  };

  fam.members.push_back({"I1", [guard](const StencilConfig& c) {
                           guard(c);
                           return (c.u("+") - c.u("0")) / (c.u("0") - c.u("-"));
                         }});
  fam.members.push_back({"I2", [guard](const StencilConfig& c) {
                           guard(c);
                           const double dvp = c.u("+") - c.u("0");
                           const double dvh = c.u("hat") - c.u("0");
                           const double dth = c.x("hat", 1) - c.x("0", 1);
                           const double ratio = c.x("0") / c.x("hat");
                           return dvp * dvp / dth * ratio * ratio *
                                  std::exp(-dvh * dvh / (2.0 * dth));
                         }});
  fam.members.push_back({"I3", [guard](const StencilConfig& c) {
                           guard(c);
                           const double dvp = c.u("+") - c.u("0");
                           const double dvm = c.u("0") - c.u("-");
                           const double dth = c.x("hat", 1) - c.x("0", 1);
                           const double lp = std::log(c.x("+") / c.x("0"));
                           const double lm = std::log(c.x("-") / c.x("0"));
                           return dvp * dvp / (4.0 * dth) -
                                  dvp * dvp / (dvp + dvm) * (lp / dvp + lm / dvm);
                         }});
  fam.members.push_back({"I4", [guard](const StencilConfig& c) {
                           guard(c);
                           const double dvp = c.u("+") - c.u("0");
                           const double dvm = c.u("0") - c.u("-");
                           const double dvh = c.u("hat") - c.u("0");
                           const double dth = c.x("hat", 1) - c.x("0", 1);
                           const double lp = std::log(c.x("+") / c.x("0"));
                           const double lm = std::log(c.x("-") / c.x("0"));
                           return dvp * dvh / dth +
                                  2.0 * dvp / (dvp + dvm) * (dvm / dvp * lp - dvp / dvm * lm);
                         }});

  fam.manifold = {[](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); },
                  [](const StencilConfig& c) { return c.x("0", 1) - c.x("-", 1); }};

  ConfigSampler s;
  s.tmpl = fam.tmpl;
  s.p = 2;
  s.q = 1;
  s.constraints = fam.manifold;
  s.draw = [tmpl = fam.tmpl](Rng& rng) {
    const double t = rng.uniform(0.3, 0.8);
    const double th = t + rng.uniform(0.1, 0.25);
    const double y0 = rng.uniform(0.8, 1.25);
    const double yp = rng.uniform(0.8, 1.25);
    const double ym = rng.uniform(0.8, 1.25);
    const double yh = rng.uniform(0.8, 1.25);
    const double v0 = rng.uniform(-1.0, 1.0);
    const double vp = v0 + rng.uniform(0.5, 1.0);
    const double vm = v0 - rng.uniform(0.5, 1.0);
    const double vh = v0 + rng.uniform(-0.4, 0.4);
    return StencilConfig(tmpl, {{{y0, t}, {v0}},
                                {{yp, t}, {vp}},
                                {{ym, t}, {vm}},
                                {{yh, th}, {vh}}});
  };
  fam.sampler = s;
  return fam;
}

ConfigFn nonlinear_heat_drift_invariant_sum_denominator() {
  return [](const StencilConfig& c) {
    const double dvp = c.u("+") - c.u("0");
    const double dvm = c.u("0") - c.u("-");
    const double dvh = c.u("hat") - c.u("0");
    const double dth = c.x("hat", 1) - c.x("0", 1);
    const double lp = std::log(c.x("+") / c.x("0"));
    const double lm = std::log(c.x("-") / c.x("0"));
    // Sum denominator v+ + v- in place of the functorial v+ - v-.
    return dvp * dvh / dth +
           2.0 * dvp / (c.u("+") + c.u("-")) * (dvm / dvp * lp - dvp / dvm * lm);
  };
}

namespace {

// Orthogonal-lattice identifications for the six-point hyperbolic stencil.
// The y coordinate of the "hat+" point stays free; everything else is pinned
// the way the lattice equations instantiate across the stencil.
std::vector<ConfigFn> wave_yz_identifications() {
  return {
      [](const StencilConfig& c) { return c.x("hat", 0) - c.x("0", 0); },
      [](const StencilConfig& c) { return c.x("check", 0) - c.x("0", 0); },
      [](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); },
      [](const StencilConfig& c) { return c.x("-", 1) - c.x("0", 1); },
      [](const StencilConfig& c) { return c.x("hat+", 1) - c.x("hat", 1); },
  };
}

StencilConfig draw_wave_yz_config(Rng& rng, const StencilTemplate& tmpl) {
  const double y0 = rng.uniform(-1.0, 1.0);
  const double z0 = rng.uniform(-1.0, 1.0);
  const double dyp = rng.uniform(0.4, 1.0);
  const double dym = rng.uniform(0.4, 1.0);
  const double dzh = rng.uniform(0.4, 1.0);
  const double dzc = rng.uniform(0.4, 1.0);
  const double dyhp = rng.uniform(0.4, 1.0);  // hat+ offset from the hat column
  auto val = [&] { return rng.uniform(0.5, 2.0); };
  return StencilConfig(tmpl, {{{y0, z0}, {val()}},
                              {{y0 + dyp, z0}, {val()}},
                              {{y0 - dym, z0}, {val()}},
                              {{y0, z0 + dzh}, {val()}},
                              {{y0, z0 - dzc}, {val()}},
                              {{y0 + dyhp, z0 + dzh}, {val()}}});
}

}  // namespace

InvariantFamily wave_invariants() {
  InvariantFamily fam;
  fam.name = "wave-yz";
  fam.p = 2;
  fam.q = 1;
  fam.tmpl = wave_template();
  fam.algebra = wave_algebra_yz();
  fam.declared_mu = 10;

  const char* pts[] = {"0", "+", "-", "check", "hat", "hat+"};
  for (int i = 0; i < 6; ++i) {
    fam.members.push_back({"I" + std::to_string(i + 1),
                           [label = std::string(pts[i])](const StencilConfig& c) {
                             return c.u(label);
                           }});
  }
  fam.members.push_back({"I7", [](const StencilConfig& c) {
                           const double dyp = c.x("+") - c.x("0");
                           const double dym = c.x("0") - c.x("-");
                           require_nonzero(dym, "dy-");
                           return dyp / dym;
                         }});
  fam.members.push_back({"I8", [](const StencilConfig& c) {
                           const double dyp = c.x("+") - c.x("0");
                           require_nonzero(dyp, "dy+");
                           return (c.x("hat+") - c.x("hat")) / dyp;
                         }});
  fam.members.push_back({"I9", [](const StencilConfig& c) {
                           const double dzc = c.x("0", 1) - c.x("check", 1);
                           require_nonzero(dzc, "dz check");
                           return (c.x("hat", 1) - c.x("0", 1)) / dzc;
                         }});
  fam.members.push_back({"I10", [](const StencilConfig& c) {
                           return (c.x("+") - c.x("0")) * (c.x("hat", 1) - c.x("0", 1));
                         }});

  fam.manifold = wave_yz_identifications();

  ConfigSampler s;
  s.tmpl = fam.tmpl;
  s.p = 2;
  s.q = 1;
  s.constraints = fam.manifold;
  s.draw = [tmpl = fam.tmpl](Rng& rng) {
    return draw_wave_yz_config(rng, tmpl);
  };
  fam.sampler = s;
  return fam;
}

InvariantFamily wave_invariants_xt() {
  InvariantFamily fam;
  fam.name = "wave-xt";
  fam.p = 2;
  fam.q = 1;
  fam.tmpl = wave_template();
  fam.algebra = wave_algebra_xt();
  fam.declared_mu = 10;

  const char* pts[] = {"0", "+", "-", "check", "hat", "hat+"};
  for (int i = 0; i < 6; ++i) {
    fam.members.push_back({"I" + std::to_string(i + 1),
                           [label = std::string(pts[i])](const StencilConfig& c) {
                             return c.u(label);
                           }});
  }
  fam.members.push_back({"I7", [](const StencilConfig& c) {
                           const double dxm = c.x("0") - c.x("-");
                           require_nonzero(dxm, "dx-");
                           return (c.x("+") - c.x("0")) / dxm;
                         }});
  fam.members.push_back({"I8", [](const StencilConfig& c) {
                           const double dxp = c.x("+") - c.x("0");
                           require_nonzero(dxp, "dx+");
                           return (c.x("hat+") - c.x("hat")) / dxp;
                         }});
  fam.members.push_back({"I9", [](const StencilConfig& c) {
                           const double dtc = c.x("0", 1) - c.x("check", 1);
                           require_nonzero(dtc, "dt check");
                           return (c.x("hat", 1) - c.x("0", 1)) / dtc;
                         }});
  fam.members.push_back({"I10", [](const StencilConfig& c) {
                           return -4.0 * (c.x("+") - c.x("0")) *
                                  (c.x("hat", 1) - c.x("0", 1));
                         }});

  fam.manifold = {
      [](const StencilConfig& c) {
        return (c.x("hat") - c.x("0")) + (c.x("hat", 1) - c.x("0", 1));
      },
      [](const StencilConfig& c) {
        return (c.x("0") - c.x("check")) + (c.x("0", 1) - c.x("check", 1));
      },
      [](const StencilConfig& c) {
        return (c.x("+") - c.x("0")) - (c.x("+", 1) - c.x("0", 1));
      },
      [](const StencilConfig& c) {
        return (c.x("0") - c.x("-")) - (c.x("0", 1) - c.x("-", 1));
      },
      [](const StencilConfig& c) {
        return (c.x("hat+") - c.x("hat")) - (c.x("hat+", 1) - c.x("hat", 1));
      },
  };

  ConfigSampler s;
  s.tmpl = fam.tmpl;
  s.p = 2;
  s.q = 1;
  s.constraints = fam.manifold;
  // Characteristic-chart samples mapped back to (x, t).
  s.draw = [tmpl = fam.tmpl](Rng& rng) {
    StencilConfig yz = draw_wave_yz_config(rng, tmpl);
    std::vector<SpacePoint> pts;
    for (std::size_t i = 0; i < yz.size(); ++i) {
      SpacePoint pt = yz.point(i);
      const double y = pt.x[0], z = pt.x[1];
      pt.x[0] = 0.5 * (y + z);
      pt.x[1] = 0.5 * (y - z);
      pts.push_back(pt);
    }
    return StencilConfig(tmpl, std::move(pts));
  };
  fam.sampler = s;
  return fam;
}

InvariantFamily family_by_id(const std::string& id) {
  if (id == "linear-ode") return linear_ode_invariants(named_scalar_fn("zero"), named_scalar_fn("id"));
  if (id == "heat") return heat_invariants();
  if (id == "nl-heat") return nonlinear_heat_invariants();
  if (id == "wave-yz") return wave_invariants();
  if (id == "wave-xt") return wave_invariants_xt();
  throw ConfigError("unknown invariant family '" + id + "'");
}

ConfigSampler rank_sampler(const std::string& family_id) {
  // The linear-ODE count is stated on the full two-point space; every other
  // family counts on its declared manifold.
  if (family_id == "linear-ode") return linear_ode_generic_sampler();
  return family_by_id(family_id).sampler;
}

ScalarFn named_scalar_fn(const std::string& spec) {
  if (spec == "zero") return [](double) { return 0.0; };
  if (spec == "id") return [](double x) { return x; };
  if (spec == "square") return [](double x) { return x * x; };
  if (spec == "sin") return [](double x) { return std::sin(x); };
  if (spec == "sqrt") return [](double x) { return std::sqrt(x); };
  if (spec == "exp") return [](double x) { return std::exp(x); };
  if (spec.rfind("const:", 0) == 0) {
    const double v = std::stod(spec.substr(6));
    return [v](double) { return v; };
  }
  throw ConfigError("unknown scalar function '" + spec + "'");
}

SourceFn named_source_fn(const std::string& spec) {
  if (spec == "zero") return [](double, double) { return 0.0; };
  if (spec == "u") return [](double u, double) { return u; };
  if (spec == "sin") return [](double u, double) { return std::sin(u); };
  if (spec.rfind("const:", 0) == 0) {
    const double v = std::stod(spec.substr(6));
    return [v](double, double) { return v; };
  }
  throw ConfigError("unknown source function '" + spec + "'");
}

}  // namespace symm
