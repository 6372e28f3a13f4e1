#include <cmath>

#include "symm/catalog.hpp"

namespace symm {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainViolation(what);
}

double angle_between(double xa, double ya, double xb, double yb) {
  // Signed angle from (xa, ya) to (xb, yb); insensitive to the atan2 branch
  // cut as long as the two rays are less than pi apart.
  return std::atan2(xa * yb - ya * xb, xa * xb + ya * yb);
}

}  // namespace

// ---------------------------------------------------------------------------
// Ordinary differential equation schemes
// ---------------------------------------------------------------------------

Scheme linear_ode_scheme(const ScalarFn& A, const ScalarFn& B, double eps) {
  Scheme s;
  s.name = "linear-ode";
  s.p = 1;
  s.q = 1;
  s.tmpl = ode_template();
  s.n_de = 1;
  s.algebra = linear_ode_algebra(A, B);
  s.params["eps"] = eps;
  s.residual_names = {"E1", "E2"};
  s.residuals.push_back([A, B](const StencilConfig& c) {
    return c.u("+") * std::exp(-A(c.x("+"))) - c.u("0") * std::exp(-A(c.x("0"))) -
           B(c.x("+")) + B(c.x("0"));
  });
  s.residuals.push_back(
      [eps](const StencilConfig& c) { return c.x("+") - c.x("0") - eps; });
  s.de_scale = [A](const StencilConfig& c) {
    return (c.x("+") - c.x("0")) * std::exp(-A(c.x("0")));
  };
  return s;
}

Scheme nonlinear_ode_scheme(const ScalarFn& A, const ScalarFn& B, double eps) {
  // Hodograph image of the linear scheme: independent y, dependent v.  The
  // first equation carries the lattice, the second steps the solution.
  Scheme s;
  s.name = "nl-ode";
  s.p = 1;
  s.q = 1;
  s.tmpl = ode_template();
  s.n_de = 1;
  s.algebra = nonlinear_ode_algebra(A, B);
  s.params["eps"] = eps;
  s.residual_names = {"E1", "E2"};
  s.residuals.push_back([A, B](const StencilConfig& c) {
    return c.x("+") * std::exp(-A(c.u("+"))) - c.x("0") * std::exp(-A(c.u("0"))) -
           B(c.u("+")) + B(c.u("0"));
  });
  s.residuals.push_back(
      [eps](const StencilConfig& c) { return c.u("+") - c.u("0") - eps; });
  s.de_scale = [A](const StencilConfig& c) {
    return (c.x("+") - c.x("0")) * std::exp(-A(c.u("0")));
  };
  return s;
}

// ---------------------------------------------------------------------------
// Parabolic schemes on evolving lattices
// ---------------------------------------------------------------------------

namespace {

struct HeatStencilView {
  double dxp, dxm, dxh, dth, u0, up, um, uh;
};

HeatStencilView read_heat(const StencilConfig& c) {
  HeatStencilView v;
  v.dxp = c.x("+") - c.x("0");
  v.dxm = c.x("0") - c.x("-");
  v.dxh = c.x("hat") - c.x("0");
  v.dth = c.x("hat", 1) - c.x("0", 1);
  v.u0 = c.u("0");
  v.up = c.u("+");
  v.um = c.u("-");
  v.uh = c.u("hat");
  require(v.u0 > 0 && v.up > 0 && v.um > 0 && v.uh > 0, "heat scheme needs u > 0");
  require(v.dxp != 0 && v.dxm != 0 && v.dth != 0, "heat scheme needs nonzero steps");
  return v;
}

// Swapped roles: ratios of the independent y, differences of the dependent v.
HeatStencilView read_nl_heat(const StencilConfig& c) {
  HeatStencilView v;
  v.dxp = c.u("+") - c.u("0");
  v.dxm = c.u("0") - c.u("-");
  v.dxh = c.u("hat") - c.u("0");
  v.dth = c.x("hat", 1) - c.x("0", 1);
  v.u0 = c.x("0");
  v.up = c.x("+");
  v.um = c.x("-");
  v.uh = c.x("hat");
  require(v.u0 > 0 && v.up > 0 && v.um > 0 && v.uh > 0, "scheme needs y > 0");
  require(v.dxp != 0 && v.dxm != 0 && v.dth != 0, "degenerate stencil (constant v)");
  return v;
}

double heat_value_residual(const HeatStencilView& v, double span) {
  const double lp = std::log(v.up / v.u0);
  const double lm = std::log(v.um / v.u0);
  const double ratio = v.u0 / v.uh;
  return ratio * ratio * std::exp(-v.dxh * v.dxh / (2.0 * v.dth)) - 1.0 +
         4.0 * v.dth / span * (lp / v.dxp + lm / v.dxm);
}

double heat_mesh_residual(const HeatStencilView& v, double span) {
  const double lp = std::log(v.up / v.u0);
  const double lm = std::log(v.um / v.u0);
  return v.dxh - 2.0 * v.dth / span * (v.dxp / v.dxm * lm - v.dxm / v.dxp * lp);
}

}  // namespace

Scheme heat_scheme(double tau) {
  Scheme s;
  s.name = "heat";
  s.p = 2;
  s.q = 1;
  s.tmpl = heat_template();
  s.n_de = 1;
  s.algebra = heat_algebra();
  s.params["tau"] = tau;
  s.residual_names = {"E1", "E2", "E3"};
  s.residuals.push_back([](const StencilConfig& c) {
    const auto v = read_heat(c);
    return heat_value_residual(v, v.dxp + v.dxm);
  });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); });
  s.residuals.push_back([](const StencilConfig& c) {
    const auto v = read_heat(c);
    return heat_mesh_residual(v, v.dxp + v.dxm);
  });
  s.de_scale = [](const StencilConfig& c) { return c.x("hat", 1) - c.x("0", 1); };
  return s;
}

Scheme nonlinear_heat_scheme(double tau) {
  Scheme s;
  s.name = "nl-heat";
  s.p = 2;
  s.q = 1;
  s.tmpl = heat_template();
  s.n_de = 1;
  s.algebra = nonlinear_heat_algebra();
  s.params["tau"] = tau;
  s.residual_names = {"E1", "E2", "E3"};
  // The transformed equation carries the combined span v+ - v-.
  s.residuals.push_back([](const StencilConfig& c) {
    const auto v = read_nl_heat(c);
    return heat_value_residual(v, c.u("+") - c.u("-"));
  });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); });
  s.residuals.push_back([](const StencilConfig& c) {
    const auto v = read_nl_heat(c);
    return heat_mesh_residual(v, c.u("+") - c.u("-"));
  });
  s.de_scale = [](const StencilConfig& c) { return c.x("hat", 1) - c.x("0", 1); };
  return s;
}

// ---------------------------------------------------------------------------
// Hyperbolic schemes
// ---------------------------------------------------------------------------

namespace {

// The invariant combination (I6-I5)/(I8 I10) - (I2-I1)/I10 - F(I1); steps are
// signed, so the same expression serves both charts.
double wave_de_residual(double du_hat_pair, double du_base_pair, double i8, double i10,
                        double f_of_u) {
  return du_hat_pair / (i8 * i10) - du_base_pair / i10 - f_of_u;
}

}  // namespace

Scheme wave_scheme_yz(const ScalarFn& F, double eps, double delta) {
  Scheme s;
  s.name = "wave-yz";
  s.p = 2;
  s.q = 1;
  s.tmpl = wave_template();
  s.n_de = 1;
  s.algebra = wave_algebra_yz();
  s.params["eps"] = eps;
  s.params["delta"] = delta;
  s.residual_names = {"E1", "E2", "E3", "E4", "E5"};
  s.residuals.push_back([F](const StencilConfig& c) {
    const double dyp = c.x("+") - c.x("0");
    const double dzh = c.x("hat", 1) - c.x("0", 1);
    require(dyp != 0 && dzh != 0, "wave scheme needs nonzero steps");
    const double i8 = (c.x("hat+") - c.x("hat")) / dyp;
    const double i10 = dyp * dzh;
    require(i8 != 0, "wave scheme needs nonzero hat step");
    return wave_de_residual(c.u("hat+") - c.u("hat"), c.u("+") - c.u("0"), i8, i10,
                            F(c.u("0")));
  });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("hat") - c.x("0"); });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); });
  s.residuals.push_back([](const StencilConfig& c) {
    const double dym = c.x("0") - c.x("-");
    require(dym != 0, "wave scheme needs nonzero steps");
    return (c.x("+") - c.x("0")) / dym - 1.0;
  });
  s.residuals.push_back([](const StencilConfig& c) {
    const double dzc = c.x("0", 1) - c.x("check", 1);
    require(dzc != 0, "wave scheme needs nonzero steps");
    return (c.x("hat", 1) - c.x("0", 1)) / dzc - 1.0;
  });
  return s;
}

Scheme wave_scheme_xt(const ScalarFn& F, double eps, double delta) {
  // Characteristic pullback of the (y, z) scheme, written in the original
  // variables on the 45-degree rotated lattice.
  Scheme s;
  s.name = "wave-xt";
  s.p = 2;
  s.q = 1;
  s.tmpl = wave_template();
  s.n_de = 1;
  s.algebra = wave_algebra_xt();
  s.params["eps"] = eps;
  s.params["delta"] = delta;
  s.residual_names = {"E1", "E2", "E3", "E4", "E5"};
  s.residuals.push_back([F](const StencilConfig& c) {
    const double dxp = c.x("+") - c.x("0");
    const double dth = c.x("hat", 1) - c.x("0", 1);
    require(dxp != 0 && dth != 0, "wave scheme needs nonzero steps");
    const double i8 = (c.x("hat+") - c.x("hat")) / dxp;
    const double i10 = -4.0 * dxp * dth;
    require(i8 != 0, "wave scheme needs nonzero hat step");
    return wave_de_residual(c.u("hat+") - c.u("hat"), c.u("+") - c.u("0"), i8, i10,
                            F(c.u("0")));
  });
  s.residuals.push_back([](const StencilConfig& c) {
    return (c.x("hat") - c.x("0")) + (c.x("hat", 1) - c.x("0", 1));
  });
  s.residuals.push_back([](const StencilConfig& c) {
    return (c.x("+") - c.x("0")) - (c.x("+", 1) - c.x("0", 1));
  });
  s.residuals.push_back([](const StencilConfig& c) {
    const double dxm = c.x("0") - c.x("-");
    require(dxm != 0, "wave scheme needs nonzero steps");
    return (c.x("+") - c.x("0")) / dxm - 1.0;
  });
  s.residuals.push_back([](const StencilConfig& c) {
    const double dtc = c.x("0", 1) - c.x("check", 1);
    require(dtc != 0, "wave scheme needs nonzero steps");
    return (c.x("hat", 1) - c.x("0", 1)) / dtc - 1.0;
  });
  return s;
}

// ---------------------------------------------------------------------------
// Elliptic schemes
// ---------------------------------------------------------------------------

Scheme polar_laplace_scheme(const SourceFn& F, double eps, double delta) {
  Scheme s;
  s.name = "polar";
  s.p = 2;
  s.q = 1;
  s.tmpl = polar_template();
  s.n_de = 1;
  s.algebra = theta_translation_algebra();
  s.params["eps"] = eps;
  s.params["delta"] = delta;
  s.residual_names = {"E1", "E2", "E3", "E4", "E5"};
  s.residuals.push_back([F, eps, delta](const StencilConfig& c) {
    const double r = c.x("0");
    require(r > 0, "polar scheme needs r > 0");
    return (c.u("+") - 2.0 * c.u("0") + c.u("-")) / (eps * eps) +
           (c.u("+") - c.u("0")) / (r * eps) +
           (c.u("hat") - 2.0 * c.u("0") + c.u("check")) / (r * r * delta * delta) -
           F(c.u("0"), r);
  });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("hat") - c.x("0"); });
  s.residuals.push_back(
      [eps](const StencilConfig& c) { return c.x("+") - c.x("0") - eps; });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); });
  s.residuals.push_back(
      [delta](const StencilConfig& c) { return c.x("hat", 1) - c.x("0", 1) - delta; });
  return s;
}

Scheme cartesian_laplace_scheme(const SourceFn& F, double eps, double delta) {
  Scheme s;
  s.name = "cartesian";
  s.p = 2;
  s.q = 1;
  s.tmpl = polar_template();
  s.n_de = 1;
  s.algebra = rotation_algebra();
  s.params["eps"] = eps;
  s.params["delta"] = delta;
  s.residual_names = {"E1", "E2", "E3", "E4", "E5"};
  auto radius = [](const StencilConfig& c, const char* label) {
    const double r = std::hypot(c.x(label, 0), c.x(label, 1));
    require(r > 0, "cartesian scheme excludes the origin");
    return r;
  };
  s.residuals.push_back([F, eps, delta, radius](const StencilConfig& c) {
    const double r = radius(c, "0");
    return (c.u("+") - 2.0 * c.u("0") + c.u("-")) / (eps * eps) +
           (c.u("+") - c.u("0")) / (r * eps) +
           (c.u("hat") - 2.0 * c.u("0") + c.u("check")) / (r * r * delta * delta) -
           F(c.u("0"), r);
  });
  s.residuals.push_back([radius](const StencilConfig& c) {
    return radius(c, "hat") - radius(c, "0");
  });
  s.residuals.push_back([radius, eps](const StencilConfig& c) {
    return radius(c, "+") - radius(c, "0") - eps;
  });
  s.residuals.push_back([](const StencilConfig& c) {
    return angle_between(c.x("0", 0), c.x("0", 1), c.x("+", 0), c.x("+", 1));
  });
  s.residuals.push_back([delta](const StencilConfig& c) {
    return angle_between(c.x("0", 0), c.x("0", 1), c.x("hat", 0), c.x("hat", 1)) - delta;
  });
  return s;
}

// ---------------------------------------------------------------------------
// Standard comparison discretizations (uniform meshes).  They keep only a
// subalgebra of the target equation's point symmetries.
// ---------------------------------------------------------------------------

Scheme standard_heat_scheme(double h, double tau) {
  Scheme s;
  s.name = "heat-standard";
  s.p = 2;
  s.q = 1;
  s.tmpl = heat_template();
  s.n_de = 1;
  s.invariant = false;
  s.params["h"] = h;
  s.params["tau"] = tau;
  SymmetryAlgebra a{2, 1, {}};
  a.fields.push_back(heat_algebra().fields[0]);
  a.fields.push_back(heat_algebra().fields[1]);
  a.fields.push_back(heat_algebra().fields[2]);
  s.algebra = a;
  s.residual_names = {"E1", "E2", "E3", "E4", "E5", "E6"};
  s.residuals.push_back([h, tau](const StencilConfig& c) {
    return (c.u("hat") - c.u("0")) / tau -
           (c.u("+") - 2.0 * c.u("0") + c.u("-")) / (h * h);
  });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); });
  s.residuals.push_back([h](const StencilConfig& c) { return c.x("+") - c.x("0") - h; });
  s.residuals.push_back([h](const StencilConfig& c) { return c.x("0") - c.x("-") - h; });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("hat") - c.x("0"); });
  s.residuals.push_back(
      [tau](const StencilConfig& c) { return c.x("hat", 1) - c.x("0", 1) - tau; });
  s.de_scale = [](const StencilConfig&) { return 1.0; };
  return s;
}

Scheme standard_wave_scheme(const ScalarFn& F, double eps, double delta) {
  Scheme s;
  s.name = "wave-standard";
  s.p = 2;
  s.q = 1;
  s.tmpl = polar_template();  // five-point cross in (x, t)
  s.n_de = 1;
  s.invariant = false;
  s.params["eps"] = eps;
  s.params["delta"] = delta;
  SymmetryAlgebra a{2, 1, {}};
  a.fields.push_back(wave_algebra_xt().fields[1]);
  a.fields.push_back(wave_algebra_xt().fields[2]);
  s.algebra = a;
  s.residual_names = {"E1", "E2", "E3", "E4", "E5"};
  s.residuals.push_back([F, eps, delta](const StencilConfig& c) {
    return (c.u("+") - 2.0 * c.u("0") + c.u("-")) / (eps * eps) -
           (c.u("hat") - 2.0 * c.u("0") + c.u("check")) / (delta * delta) +
           4.0 * F(c.u("0"));
  });
  s.residuals.push_back(
      [eps](const StencilConfig& c) { return c.x("+") - c.x("0") - eps; });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("hat") - c.x("0"); });
  s.residuals.push_back(
      [delta](const StencilConfig& c) { return c.x("hat", 1) - c.x("0", 1) - delta; });
  s.de_scale = [](const StencilConfig&) { return 1.0; };
  return s;
}

Scheme standard_laplace_scheme(const SourceFn& F, double eps, double delta) {
  Scheme s;
  s.name = "laplace-standard";
  s.p = 2;
  s.q = 1;
  s.tmpl = polar_template();
  s.n_de = 1;
  s.invariant = false;
  s.params["eps"] = eps;
  s.params["delta"] = delta;
  s.algebra = SymmetryAlgebra{2, 1, {}};  // rotation is broken on this mesh
  s.residual_names = {"E1", "E2", "E3", "E4", "E5"};
  s.residuals.push_back([F, eps, delta](const StencilConfig& c) {
    const double r = std::hypot(c.x("0", 0), c.x("0", 1));
    return (c.u("+") - 2.0 * c.u("0") + c.u("-")) / (eps * eps) +
           (c.u("hat") - 2.0 * c.u("0") + c.u("check")) / (delta * delta) -
           F(c.u("0"), r);
  });
  s.residuals.push_back(
      [eps](const StencilConfig& c) { return c.x("+") - c.x("0") - eps; });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); });
  s.residuals.push_back([](const StencilConfig& c) { return c.x("hat") - c.x("0"); });
  s.residuals.push_back(
      [delta](const StencilConfig& c) { return c.x("hat", 1) - c.x("0", 1) - delta; });
  s.de_scale = [](const StencilConfig&) { return 1.0; };
  return s;
}

Scheme scheme_by_id(const std::string& id, const SchemeParams& params) {
  ScalarFn A = params.A ? params.A : named_scalar_fn("zero");
  ScalarFn B = params.B ? params.B : named_scalar_fn("id");
  ScalarFn F = params.F ? params.F : named_scalar_fn("zero");
  SourceFn Fs = params.F_source ? params.F_source : named_source_fn("zero");
  if (id == "linear-ode") return linear_ode_scheme(A, B, params.eps);
  if (id == "nl-ode") return nonlinear_ode_scheme(A, B, params.eps);
  if (id == "heat") return heat_scheme(params.tau);
  if (id == "nl-heat") return nonlinear_heat_scheme(params.tau);
  if (id == "wave-yz") return wave_scheme_yz(F, params.eps, params.delta);
  if (id == "wave-xt") return wave_scheme_xt(F, params.eps, params.delta);
  if (id == "polar") return polar_laplace_scheme(Fs, params.eps, params.delta);
  if (id == "cartesian") return cartesian_laplace_scheme(Fs, params.eps, params.delta);
  if (id == "heat-standard") return standard_heat_scheme(params.h, params.tau);
  if (id == "wave-standard") return standard_wave_scheme(F, params.eps, params.delta);
  if (id == "laplace-standard") return standard_laplace_scheme(Fs, params.eps, params.delta);
  throw ConfigError("unknown scheme '" + id + "'");
}

// ---------------------------------------------------------------------------
// Scheme manifold samplers
// ---------------------------------------------------------------------------

namespace {

StencilConfig draw_heat_scheme_config(Rng& rng, const StencilTemplate& tmpl, bool hodograph) {
  const double t = rng.uniform(0.3, 0.8);
  const double tau = rng.uniform(0.05, 0.15);
  const double x0 = rng.uniform(-1.0, 1.0);
  const double dxp = rng.uniform(0.5, 1.0);
  const double dxm = rng.uniform(0.5, 1.0);
  auto val = [&] { return rng.uniform(0.9, 1.11); };
  const double u0 = val(), up = val(), um = val();
  const double lp = std::log(up / u0), lm = std::log(um / u0);
  const double span = dxp + dxm;
  const double dxh = 2.0 * tau / span * (dxp / dxm * lm - dxm / dxp * lp);
  const double rhs = 1.0 - 4.0 * tau / span * (lp / dxp + lm / dxm);
  if (!(rhs > 0)) throw StepTooLarge("sampler drew an unsolvable update");
  const double uh = u0 * std::exp(-dxh * dxh / (4.0 * tau)) / std::sqrt(rhs);
  if (!hodograph) {
    return StencilConfig(tmpl, {{{x0, t}, {u0}},
                                {{x0 + dxp, t}, {up}},
                                {{x0 - dxm, t}, {um}},
                                {{x0 + dxh, t + tau}, {uh}}});
  }
  return StencilConfig(tmpl, {{{u0, t}, {x0}},
                              {{up, t}, {x0 + dxp}},
                              {{um, t}, {x0 - dxm}},
                              {{uh, t + tau}, {x0 + dxh}}});
}

}  // namespace

ConfigSampler scheme_manifold_sampler(const Scheme& scheme) {
  ConfigSampler s;
  s.tmpl = scheme.tmpl;
  s.p = scheme.p;
  s.q = scheme.q;
  for (const auto& r : scheme.residuals) s.constraints.push_back(r);
  const std::string id = scheme.name;

  if (id == "linear-ode" || id == "nl-ode") {
    const double eps = scheme.params.at("eps");
    const bool swapped = id == "nl-ode";
    // E1 is affine in the remaining unknown (the new dependent value for the
    // linear scheme, the new lattice position for its hodograph image), so
    // two evaluations solve it exactly for any (A, B).
    ConfigFn e1 = scheme.residuals[0];
    s.draw = [eps, swapped, e1, tmpl = s.tmpl](Rng& rng) {
      const double a = rng.uniform(-1.0, 1.0);  // stepped coordinate
      const double b = rng.uniform(0.5, 2.0);   // free coordinate at the base
      SpacePoint p0 = swapped ? SpacePoint{{b}, {a}} : SpacePoint{{a}, {b}};
      const double ap = a + eps;
      auto with_unknown = [&](double w) {
        SpacePoint pp = swapped ? SpacePoint{{w}, {ap}} : SpacePoint{{ap}, {w}};
        return StencilConfig(tmpl, {p0, pp});
      };
      const double f0 = e1(with_unknown(0.0));
      const double f1 = e1(with_unknown(1.0));
      return with_unknown(-f0 / (f1 - f0));
    };
    return s;
  }
  if (id == "heat") {
    s.draw = [tmpl = s.tmpl](Rng& rng) { return draw_heat_scheme_config(rng, tmpl, false); };
    return s;
  }
  if (id == "nl-heat") {
    s.draw = [tmpl = s.tmpl](Rng& rng) { return draw_heat_scheme_config(rng, tmpl, true); };
    return s;
  }
  if (id == "wave-yz" || id == "wave-xt") {
    // Rebuild F from the DE residual: on a manifold draw, E1 = 0 pins u(hat+).
    ConfigFn e1 = scheme.residuals[0];
    const bool to_xt = id == "wave-xt";
    s.draw = [e1, to_xt, tmpl = s.tmpl](Rng& rng) {
      const double y0 = rng.uniform(-1.0, 1.0);
      const double z0 = rng.uniform(-1.0, 1.0);
      const double a = rng.uniform(0.4, 1.0);   // dy+ = dy-
      const double b = rng.uniform(0.4, 1.0);   // dz hat = dz check
      const double dyhp = rng.uniform(0.4, 1.0);
      auto val = [&] { return rng.uniform(0.5, 2.0); };
      const double u0 = val(), up = val(), um = val(), uh = val(), uc = val();
      std::vector<SpacePoint> pts = {{{y0, z0}, {u0}},
                                     {{y0 + a, z0}, {up}},
                                     {{y0 - a, z0}, {um}},
                                     {{y0, z0 + b}, {uh}},
                                     {{y0, z0 - b}, {uc}},
                                     {{y0 + dyhp, z0 + b}, {0.0}}};
      if (to_xt) {
        for (auto& pt : pts) {
          const double y = pt.x[0], z = pt.x[1];
          pt.x[0] = 0.5 * (y + z);
          pt.x[1] = 0.5 * (y - z);
        }
      }
      // Solve E1 = 0 for u(hat+): the residual is affine in that slot.
      StencilConfig c0(tmpl, pts);
      const double f0 = e1(c0);
      pts[5].u[0] = 1.0;
      const double f1 = e1(StencilConfig(tmpl, pts));
      pts[5].u[0] = -f0 / (f1 - f0);
      return StencilConfig(tmpl, pts);
    };
    return s;
  }
  if (id == "polar" || id == "cartesian") {
    const double eps = scheme.params.at("eps");
    const double delta = scheme.params.at("delta");
    const bool to_cartesian = id == "cartesian";
    ConfigFn e1 = scheme.residuals[0];
    s.draw = [eps, delta, to_cartesian, e1, tmpl = s.tmpl](Rng& rng) {
      const double r0 = rng.uniform(1.0, 2.0);
      const double th0 = rng.uniform(-2.0, 2.0);
      auto val = [&] { return rng.uniform(0.5, 2.0); };
      std::vector<SpacePoint> pts = {{{r0, th0}, {val()}},
                                     {{r0 + eps, th0}, {val()}},
                                     {{r0 - eps, th0}, {val()}},
                                     {{r0, th0 + delta}, {val()}},
                                     {{r0, th0 - delta}, {0.0}}};
      if (to_cartesian) {
        for (auto& pt : pts) {
          const double r = pt.x[0], th = pt.x[1];
          pt.x[0] = r * std::cos(th);
          pt.x[1] = r * std::sin(th);
        }
      }
      // Solve E1 = 0 for u(check); affine slot.
      StencilConfig c0(tmpl, pts);
      const double f0 = e1(c0);
      pts[4].u[0] = 1.0;
      const double f1 = e1(StencilConfig(tmpl, pts));
      pts[4].u[0] = -f0 / (f1 - f0);
      return StencilConfig(tmpl, pts);
    };
    return s;
  }
  if (id == "heat-standard") {
    const double h = scheme.params.at("h");
    const double tau = scheme.params.at("tau");
    s.draw = [h, tau, tmpl = s.tmpl](Rng& rng) {
      const double t = rng.uniform(0.3, 0.8);
      const double x0 = rng.uniform(-1.0, 1.0);
      auto val = [&] { return rng.uniform(0.5, 2.0); };
      const double u0 = val(), up = val(), um = val();
      const double uh = u0 + tau * (up - 2.0 * u0 + um) / (h * h);
      return StencilConfig(tmpl, {{{x0, t}, {u0}},
                                  {{x0 + h, t}, {up}},
                                  {{x0 - h, t}, {um}},
                                  {{x0, t + tau}, {uh}}});
    };
    return s;
  }
  if (id == "wave-standard" || id == "laplace-standard") {
    const double eps = scheme.params.at("eps");
    const double delta = scheme.params.at("delta");
    ConfigFn e1 = scheme.residuals[0];
    s.draw = [eps, delta, e1, tmpl = s.tmpl](Rng& rng) {
      const double x0 = rng.uniform(-1.0, 1.0);
      const double t0 = rng.uniform(-1.0, 1.0);
      auto val = [&] { return rng.uniform(0.5, 2.0); };
      std::vector<SpacePoint> pts = {{{x0, t0}, {val()}},
                                     {{x0 + eps, t0}, {val()}},
                                     {{x0 - eps, t0}, {val()}},
                                     {{x0, t0 + delta}, {val()}},
                                     {{x0, t0 - delta}, {0.0}}};
      StencilConfig c0(tmpl, pts);
      const double f0 = e1(c0);
      pts[4].u[0] = 1.0;
      const double f1 = e1(StencilConfig(tmpl, pts));
      pts[4].u[0] = -f0 / (f1 - f0);
      return StencilConfig(tmpl, pts);
    };
    return s;
  }
  throw ConfigError("no manifold sampler for scheme '" + id + "'");
}

// ---------------------------------------------------------------------------
// Exact discrete solutions
// ---------------------------------------------------------------------------

ExactSolution heat_exponential_solution(double h, double x0, double t0, double tau, double c,
                                        double K) {
  ExactSolution sol;
  sol.p = 2;
  sol.q = 1;
  sol.at = [=](long m, long n) {
    const double t = tau * m + t0;
    const double x = h * n + x0 + 2.0 * c * t;
    return SpacePoint{{x, t}, {K * std::exp(-c * x + c * c * t)}};
  };
  return sol;
}

ExactSolution heat_fundamental_solution(double h, double x0, double t0, double tau) {
  ExactSolution sol;
  sol.p = 2;
  sol.q = 1;
  sol.at = [=](long m, long n) {
    const double t = tau * m + t0;
    const double x = (h * n + x0) * t;
    return SpacePoint{{x, t}, {std::exp(-x * x / (4.0 * t)) / std::sqrt(4.0 * M_PI * t)}};
  };
  return sol;
}

ExactSolution linear_ode_solution(const ScalarFn& A, const ScalarFn& B, double c, double eps,
                                  double x0) {
  ExactSolution sol;
  sol.p = 1;
  sol.q = 1;
  sol.at = [=](long m, long) {
    const double x = eps * m + x0;
    return SpacePoint{{x}, {(B(x) + c) * std::exp(A(x))}};
  };
  return sol;
}

ExactSolution nonlinear_ode_solution(const ScalarFn& A, const ScalarFn& B, double c, double eps,
                                     double v0) {
  ExactSolution sol;
  sol.p = 1;
  sol.q = 1;
  sol.at = [=](long m, long) {
    const double v = eps * m + v0;
    return SpacePoint{{(B(v) + c) * std::exp(A(v))}, {v}};
  };
  return sol;
}

}  // namespace symm
