#include <cmath>

#include "doctest.h"
#include "symm/catalog.hpp"
#include "symm/flow.hpp"
#include "symm/rng.hpp"

using namespace symm;

TEST_CASE("translation flow") {
  VectorField v = translation_x(1, 1, 0, "d/dt");
  SpacePoint pt{{1.0}, {0.0}};
  SpacePoint out = flow(v, pt, 0.5);
  CHECK(out.x[0] == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("scaling flow is a closed-form exponential") {
  VectorField v = scaling_u(1, 1, 0, "u d/du");
  SpacePoint out = flow(v, {{0.0}, {2.0}}, std::log(2.0));
  CHECK(out.u[0] == doctest::Approx(4.0).epsilon(1e-11));
}

TEST_CASE("zero parameter is the exact identity") {
  VectorField v = heat_algebra().fields[5];
  SpacePoint pt{{0.3, 0.7}, {1.1}};
  SpacePoint out = flow(v, pt, 0.0);
  CHECK(out.x[0] == pt.x[0]);
  CHECK(out.x[1] == pt.x[1]);
  CHECK(out.u[0] == pt.u[0]);
}

TEST_CASE("Galilei-type flow matches the hand-integrated solution") {
  // d/de (x,t,u) = (2t, 0, -xu) integrates to
  // x+2te, t, u*exp(-xe - te^2).
  VectorField v5 = heat_algebra().fields[4];
  SpacePoint out = flow(v5, {{1.0, 1.0}, {1.0}}, 0.1);
  CHECK(out.x[0] == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(out.x[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.u[0] == doctest::Approx(std::exp(-0.11)).epsilon(1e-10));
}

TEST_CASE("projective flow matches the hand-integrated solution") {
  // x/(1-4te), t/(1-4te), u*sqrt(1-4te)*exp(-x^2 e/(1-4te)).
  VectorField v6 = heat_algebra().fields[5];
  const double x = 0.7, t = 0.8, u = 1.3, e = 0.15;
  const double den = 1.0 - 4.0 * t * e;
  SpacePoint out = flow(v6, {{x, t}, {u}}, e);
  CHECK(out.x[0] == doctest::Approx(x / den).epsilon(1e-11));
  CHECK(out.x[1] == doctest::Approx(t / den).epsilon(1e-11));
  CHECK(out.u[0] == doctest::Approx(u * std::sqrt(den) * std::exp(-x * x * e / den))
                        .epsilon(1e-10));
}

TEST_CASE("one-parameter group law") {
  Rng rng(11);
  const auto algebra = heat_algebra();
  for (int trial = 0; trial < 20; ++trial) {
    const auto& v = algebra.fields[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    SpacePoint pt{{rng.uniform(-1.0, 1.0), rng.uniform(0.2, 0.8)}, {rng.uniform(0.5, 2.0)}};
    const double a = rng.uniform(-0.1, 0.1);
    const double b = rng.uniform(-0.1, 0.1);
    SpacePoint two = flow(v, flow(v, pt, a), b);
    SpacePoint one = flow(v, pt, a + b);
    for (int i = 0; i < 2; ++i) CHECK(two.x[i] == doctest::Approx(one.x[i]).epsilon(1e-9));
    CHECK(two.u[0] == doctest::Approx(one.u[0]).epsilon(1e-9));
  }
}

TEST_CASE("prolonged flow acts pointwise and keeps the template") {
  StencilConfig c(ode_template(), {{{0.0}, {1.0}}, {{1.0}, {3.0}}});
  VectorField v = translation_x(1, 1, 0, "d/dx");
  StencilConfig out = prolonged_flow(v, c, 2.0);
  CHECK(out.x("0") == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(out.x("+") == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(steps(out).at("dx1_plus") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.stencil_template() == c.stencil_template());
}

TEST_CASE("scaling of all dependent values leaves coordinates fixed") {
  VectorField v3 = heat_algebra().fields[2];
  StencilConfig c(heat_template(), {{{0.0, 0.0}, {1.0}},
                                    {{1.0, 0.0}, {2.0}},
                                    {{-1.0, 0.0}, {3.0}},
                                    {{0.1, 0.2}, {4.0}}});
  StencilConfig out = prolonged_flow(v3, c, 0.3);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(out.point(i).x[0] == doctest::Approx(c.point(i).x[0]).epsilon(1e-12));
    CHECK(out.point(i).u[0] ==
          doctest::Approx(c.point(i).u[0] * std::exp(0.3)).epsilon(1e-11));
  }
}

TEST_CASE("flows escaping the domain are reported") {
  VectorField blow{"blow",
                   [](const Vec& x, const Vec&) {
                     return Vec{x[0] * x[0]};  // finite-time blowup
                   },
                   [](const Vec&, const Vec&) { return Vec{0.0}; }};
  CHECK_THROWS_AS(flow(blow, {{1.0}, {1.0}}, 2.0), Error);
}

TEST_CASE("an unresolvable derivative starves the step controller") {
  // Oscillation faster than the smallest representable step: the error
  // estimate never meets the tolerance and the controller gives up.
  VectorField rough{"rough",
                    [](const Vec& x, const Vec&) {
                      return Vec{2.0 + std::sin(1e16 * x[0])};
                    },
                    [](const Vec&, const Vec&) { return Vec{0.0}; }};
  CHECK_THROWS_AS(flow(rough, {{0.1}, {0.0}}, 1.0), StepSizeUnderflow);
}
