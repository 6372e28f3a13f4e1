#include "symm/flow.hpp"

#include <algorithm>
#include <cmath>

namespace symm {

namespace {

constexpr double kRelTol = 1e-12;
constexpr double kAbsTol = 1e-14;

using State = Vec;

State eval_rhs(const VectorField& v, const State& s, int p, int q) {
  SpacePoint pt;
  pt.x.assign(s.begin(), s.begin() + p);
  pt.u.assign(s.begin() + p, s.end());
  Vec out = v.coefficients(pt);
  for (double d : out)
    if (!std::isfinite(d)) throw FlowEscapedDomain("non-finite flow derivative for " + v.name);
  (void)q;
  return out;
}

}  // namespace

SpacePoint flow(const VectorField& v, const SpacePoint& pt, double eps) {
  if (eps == 0.0) return pt;
  if (!pt.finite()) throw FlowEscapedDomain("non-finite start point");

  const int p = static_cast<int>(pt.x.size());
  const int q = static_cast<int>(pt.u.size());
  const int dim = p + q;

  State y(pt.x);
  y.insert(y.end(), pt.u.begin(), pt.u.end());

  // Dormand-Prince 5(4), FSAL.
  static const double a2[] = {1.0 / 5};
  static const double a3[] = {3.0 / 40, 9.0 / 40};
  static const double a4[] = {44.0 / 45, -56.0 / 15, 32.0 / 9};
  static const double a5[] = {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729};
  static const double a6[] = {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
                              -5103.0 / 18656};
  static const double b5[] = {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784,
                              11.0 / 84, 0.0};
  static const double b4[] = {5179.0 / 57600, 0.0,           7571.0 / 16695, 393.0 / 640,
                              -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

  const double dir = eps > 0 ? 1.0 : -1.0;
  const double span = std::abs(eps);
  double s = 0.0;                       // arc parameter in [0, span]
  double h = std::min(span, span / 8);  // initial step
  State k1 = eval_rhs(v, y, p, q);
  long iter = 0;

  while (s < span) {
    if (++iter > 1000000)
      throw StepSizeUnderflow("flow stalled before reaching the target for " + v.name);
    h = std::min(h, span - s);
    if (h < 1e-15 * span) throw StepSizeUnderflow("flow step underflow for " + v.name);

    const double hd = dir * h;
    auto stage = [&](const double* a, int n, const std::vector<State>& ks) {
      State z = y;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < dim; ++i) z[i] += hd * a[j] * ks[j][i];
      return eval_rhs(v, z, p, q);
    };

    std::vector<State> k;
    k.push_back(k1);
    k.push_back(stage(a2, 1, k));
    k.push_back(stage(a3, 2, k));
    k.push_back(stage(a4, 3, k));
    k.push_back(stage(a5, 4, k));
    k.push_back(stage(a6, 5, k));

    State y5 = y, y4 = y;
    for (int j = 0; j < 6; ++j)
      for (int i = 0; i < dim; ++i) {
        y5[i] += hd * b5[j] * k[j][i];
        y4[i] += hd * b4[j] * k[j][i];
      }
    State k7 = eval_rhs(v, y5, p, q);
    for (int i = 0; i < dim; ++i) y4[i] += hd * b4[6] * k7[i];

    double err = 0.0;
    for (int i = 0; i < dim; ++i) {
      double scale = kAbsTol + kRelTol * std::max(std::abs(y[i]), std::abs(y5[i]));
      double e = (y5[i] - y4[i]) / scale;
      err += e * e;
    }
    err = std::sqrt(err / dim);

    if (err <= 1.0) {
      s += h;
      y = y5;
      k1 = k7;  // FSAL
      for (double d : y)
        if (!std::isfinite(d)) throw FlowEscapedDomain("flow state diverged for " + v.name);
    }
    double factor = err > 0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }

  SpacePoint out;
  out.x.assign(y.begin(), y.begin() + p);
  out.u.assign(y.begin() + p, y.end());
  return out;
}

StencilConfig prolonged_flow(const VectorField& v, const StencilConfig& config, double eps) {
  std::vector<SpacePoint> pts;
  pts.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) pts.push_back(flow(v, config.point(i), eps));
  return StencilConfig(config.stencil_template(), std::move(pts));
}

}  // namespace symm
