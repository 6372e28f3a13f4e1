#include <cmath>

#include "doctest.h"
#include "symm/catalog.hpp"
#include "symm/invariance.hpp"

using namespace symm;

namespace {

StencilConfig two_point(double x0, double u0, double xp, double up) {
  return StencilConfig(ode_template(), {{{x0}, {u0}}, {{xp}, {up}}});
}

}  // namespace

TEST_CASE("derivative of a step under translation vanishes") {
  VectorField v = translation_x(1, 1, 0, "d/dx");
  ConfigFn f = [](const StencilConfig& c) { return c.x("+") - c.x("0"); };
  const double d = directional_derivative(prolong(v, ode_template()), f,
                                          two_point(0.2, 1.0, 1.3, 2.0));
  CHECK(std::abs(d) < 1e-8);
}

TEST_CASE("derivative of a log ratio under value scaling vanishes") {
  VectorField v = scaling_u(1, 1, 0, "u d/du");
  ConfigFn f = [](const StencilConfig& c) { return std::log(c.u("+") / c.u("0")); };
  const double d = directional_derivative(prolong(v, ode_template()), f,
                                          two_point(0.0, 0.7, 1.0, 1.9));
  CHECK(std::abs(d) < 1e-8);
}

TEST_CASE("Euler field measures the coordinate") {
  VectorField v{"x d/dx", [](const Vec& x, const Vec&) { return Vec{x[0]}; },
                [](const Vec&, const Vec&) { return Vec{0.0}; }};
  ConfigFn f = [](const StencilConfig& c) { return c.x("0"); };
  const double d = directional_derivative(prolong(v, ode_template()), f,
                                          two_point(2.0, 1.0, 3.0, 1.0));
  CHECK(d == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("directional derivative matches the flow quotient at first order") {
  // Richardson check on a non-invariant function: the defect of the flow
  // quotient halves with the parameter.
  const auto v5 = heat_algebra().fields[4];
  ConfigFn f = [](const StencilConfig& c) { return c.x("0") * c.u("0") + c.u("hat"); };
  StencilConfig c(heat_template(), {{{0.4, 0.5}, {1.2}},
                                    {{1.1, 0.5}, {0.9}},
                                    {{-0.3, 0.5}, {1.4}},
                                    {{0.5, 0.8}, {1.1}}});
  const double dd = directional_derivative(prolong(v5, heat_template()), f, c);
  auto quotient = [&](double eps) {
    return (f(prolonged_flow(v5, c, eps)) - f(c)) / eps;
  };
  const double e1 = std::abs(quotient(1e-3) - dd);
  const double e2 = std::abs(quotient(5e-4) - dd);
  CHECK(dd != doctest::Approx(0.0));
  CHECK(e1 < 1e-2);
  CHECK(e2 < 0.75 * e1);
}

TEST_CASE("directional derivative is linear in the prolonged field") {
  ConfigFn f = [](const StencilConfig& c) { return c.x("0") * c.x("0") * c.u("+"); };
  StencilConfig c = two_point(0.8, 1.1, 1.7, 0.6);
  const auto alg = linear_ode_algebra(named_scalar_fn("zero"), named_scalar_fn("id"));
  const double d1 = directional_derivative(prolong(alg.fields[0], ode_template()), f, c);
  const double d2 = directional_derivative(prolong(alg.fields[1], ode_template()), f, c);
  VectorField sum{"sum",
                  [a = alg.fields[0], b = alg.fields[1]](const Vec& x, const Vec& u) {
                    Vec va = a.xi(x, u), vb = b.xi(x, u);
                    for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
                    return va;
                  },
                  [a = alg.fields[0], b = alg.fields[1]](const Vec& x, const Vec& u) {
                    Vec va = a.phi(x, u), vb = b.phi(x, u);
                    for (std::size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
                    return va;
                  }};
  const double ds = directional_derivative(prolong(sum, ode_template()), f, c);
  CHECK(ds == doctest::Approx(d1 + d2).epsilon(1e-9));
}

TEST_CASE("strong invariance of the linear-ODE coordinates") {
  auto fam = linear_ode_invariants(named_scalar_fn("zero"), named_scalar_fn("id"));
  Rng rng(3);
  for (const auto& [name, fn] : fam.members) {
    auto report = check_strong_invariance(fn, name, fam.algebra, fam.sampler, 100, rng);
    CHECK(report.pass);
  }
}

TEST_CASE("a bare coordinate fails against a translation algebra") {
  SymmetryAlgebra alg{1, 1, {translation_x(1, 1, 0, "d/dx")}};
  ConfigFn f = [](const StencilConfig& c) { return c.x("0"); };
  Rng rng(5);
  auto report = check_strong_invariance(f, "x", alg, linear_ode_generic_sampler(), 20, rng);
  CHECK_FALSE(report.pass);
  CHECK(report.entries[0].max_violation == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("flat-layer equation is weakly invariant under the heat algebra") {
  auto fam = heat_invariants();
  ConfigFn dt_plus = fam.manifold[0];
  Rng rng(17);
  auto report = check_weak_invariance(dt_plus, "dt+", fam.algebra, fam.sampler, 100, rng);
  CHECK(report.pass);
}

TEST_CASE("off the flat layer the projective generator sees dt+") {
  // pr V6 [t+ - t] = 4 t+^2 - 4 t^2.
  const auto v6 = heat_algebra().fields[5];
  ConfigFn dt_plus = [](const StencilConfig& c) { return c.x("+", 1) - c.x("0", 1); };
  StencilConfig c(heat_template(), {{{0.0, 0.5}, {1.0}},
                                    {{1.0, 0.9}, {1.0}},
                                    {{-1.0, 0.5}, {1.0}},
                                    {{0.0, 1.1}, {1.0}}});
  const double d = directional_derivative(prolong(v6, heat_template()), dt_plus, c);
  CHECK(d == doctest::Approx(4.0 * (0.9 * 0.9 - 0.5 * 0.5)).epsilon(1e-7));
}

TEST_CASE("weak invariance rejects samplers that leave the manifold") {
  auto fam = heat_invariants();
  ConfigFn not_satisfied = [](const StencilConfig& c) {
    return c.x("hat", 1) - c.x("0", 1);  // dt hat is nonzero on the samples
  };
  Rng rng(23);
  CHECK_THROWS_AS(check_weak_invariance(not_satisfied, "dth", fam.algebra, fam.sampler, 10,
                                        rng),
                  SamplerViolatesManifold);
}

TEST_CASE("finite invariance detects a scaled function") {
  SymmetryAlgebra alg{1, 1, {scaling_u(1, 1, 0, "u d/du")}};
  ConfigFn f = [](const StencilConfig& c) { return c.u("0"); };
  Rng rng(29);
  auto report = check_finite_invariance(f, "u", alg, linear_ode_generic_sampler(),
                                        default_eps_sweep(), 20, rng);
  CHECK_FALSE(report.pass);
}

TEST_CASE("prolonged projective coefficients evaluate pointwise") {
  const auto v6 = heat_algebra().fields[5];
  StencilConfig c(heat_template(), {{{0.3, 0.5}, {1.2}},
                                    {{0.9, 0.5}, {0.8}},
                                    {{-0.4, 0.5}, {1.1}},
                                    {{0.35, 0.75}, {1.4}}});
  Vec row = prolong(v6, heat_template()).coefficients(c);
  // Slots of the hat point: x, t, u at offsets 9, 10, 11.
  const double xh = 0.35, th = 0.75, uh = 1.4;
  CHECK(row[9] == doctest::Approx(4.0 * th * xh));
  CHECK(row[10] == doctest::Approx(4.0 * th * th));
  CHECK(row[11] == doctest::Approx(-(xh * xh + 2.0 * th) * uh));
}
