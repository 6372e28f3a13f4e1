#include "symm/transform.hpp"

#include <cmath>
#include <cstdio>

namespace symm {

namespace {

bool in_domain(const std::function<bool(const SpacePoint&)>& guard, const SpacePoint& pt) {
  return !guard || guard(pt);
}

// Finite-difference total derivative of the forward map.
Eigen::MatrixXd fd_jacobian(const PointTransformation& psi, const SpacePoint& pt) {
  const int dim = psi.p + psi.q;
  Eigen::MatrixXd jac(dim, dim);
  Vec flat(pt.x);
  flat.insert(flat.end(), pt.u.begin(), pt.u.end());
  for (int j = 0; j < dim; ++j) {
    const double h = std::max(1e-7, 1e-7 * std::abs(flat[j]));
    auto eval = [&](double value) {
      Vec coords = flat;
      coords[j] = value;
      SpacePoint q;
      q.x.assign(coords.begin(), coords.begin() + psi.p);
      q.u.assign(coords.begin() + psi.p, coords.end());
      return apply(psi, q);
    };
    SpacePoint fp = eval(flat[j] + h);
    SpacePoint fm = eval(flat[j] - h);
    for (int i = 0; i < psi.p; ++i) jac(i, j) = (fp.x[i] - fm.x[i]) / (2.0 * h);
    for (int i = 0; i < psi.q; ++i) jac(psi.p + i, j) = (fp.u[i] - fm.u[i]) / (2.0 * h);
  }
  return jac;
}

}  // namespace

SpacePoint apply(const PointTransformation& psi, const SpacePoint& pt) {
  if (!in_domain(psi.forward_domain, pt))
    throw OutsideChart("point outside forward chart of " + psi.name);
  SpacePoint out = psi.forward(pt);
  if (!out.finite()) throw OutsideChart("non-finite image under " + psi.name);
  return out;
}

SpacePoint apply_inverse(const PointTransformation& psi, const SpacePoint& pt) {
  if (!in_domain(psi.inverse_domain, pt))
    throw OutsideChart("point outside inverse chart of " + psi.name);
  SpacePoint out = psi.inverse(pt);
  if (!out.finite()) throw OutsideChart("non-finite preimage under " + psi.name);
  return out;
}

StencilConfig pushforward_stencil(const PointTransformation& psi, const StencilConfig& config) {
  std::vector<SpacePoint> pts;
  pts.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    try {
      pts.push_back(apply(psi, config.point(i)));
    } catch (const OutsideChart&) {
      throw OutsideChart(psi.name + " undefined at stencil point '" +
                         config.stencil_template().labels()[i] + "'");
    }
  }
  return StencilConfig(config.stencil_template(), std::move(pts));
}

StencilConfig pullback_stencil(const PointTransformation& psi, const StencilConfig& config) {
  std::vector<SpacePoint> pts;
  pts.reserve(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    try {
      pts.push_back(apply_inverse(psi, config.point(i)));
    } catch (const OutsideChart&) {
      throw OutsideChart(psi.name + " inverse undefined at stencil point '" +
                         config.stencil_template().labels()[i] + "'");
    }
  }
  return StencilConfig(config.stencil_template(), std::move(pts));
}

ConfigFn pushforward_invariant(const PointTransformation& psi, const ConfigFn& f) {
  return [psi, f](const StencilConfig& c) { return f(pullback_stencil(psi, c)); };
}

Scheme pushforward_scheme(const PointTransformation& psi, const Scheme& scheme) {
  Scheme out;
  out.name = scheme.name + " via " + psi.name;
  out.p = scheme.p;
  out.q = scheme.q;
  out.tmpl = scheme.tmpl;
  out.n_de = scheme.n_de;
  out.invariant = scheme.invariant;
  out.params = scheme.params;
  for (std::size_t i = 0; i < scheme.residuals.size(); ++i) {
    out.residuals.push_back(pushforward_invariant(psi, scheme.residuals[i]));
    out.residual_names.push_back(scheme.residual_names[i]);
  }
  out.algebra = conjugate_algebra(psi, scheme.algebra);
  if (scheme.de_scale) out.de_scale = pushforward_invariant(psi, scheme.de_scale);
  return out;
}

VectorField conjugate_field(const PointTransformation& psi, const VectorField& v) {
  const PointTransformation map = psi;
  const VectorField base = v;
  if (!psi.jacobian)
    std::fprintf(stderr, "warning: %s has no analytic Jacobian; conjugating %s by finite differences\n",
                 psi.name.c_str(), v.name.c_str());
  VectorField out;
  out.name = "d" + psi.name + "(" + v.name + ")";
  auto push = [map, base](const Vec& x, const Vec& u) {
    SpacePoint image{x, u};
    SpacePoint pre = apply_inverse(map, image);
    Eigen::MatrixXd jac = map.jacobian ? map.jacobian(pre) : fd_jacobian(map, pre);
    Vec w = base.coefficients(pre);
    Eigen::VectorXd wv(static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) wv(static_cast<Eigen::Index>(i)) = w[i];
    Eigen::VectorXd pushed = jac * wv;
    Vec result(pushed.size());
    for (Eigen::Index i = 0; i < pushed.size(); ++i) result[static_cast<std::size_t>(i)] = pushed(i);
    return result;
  };
  const int p = psi.p, q = psi.q;
  out.xi = [push, p](const Vec& x, const Vec& u) {
    Vec full = push(x, u);
    return Vec(full.begin(), full.begin() + p);
  };
  out.phi = [push, p, q](const Vec& x, const Vec& u) {
    Vec full = push(x, u);
    return Vec(full.begin() + p, full.begin() + p + q);
  };
  return out;
}

SymmetryAlgebra conjugate_algebra(const PointTransformation& psi, const SymmetryAlgebra& a) {
  SymmetryAlgebra out;
  out.p = a.p;
  out.q = a.q;
  for (const auto& f : a.fields) out.fields.push_back(conjugate_field(psi, f));
  return out;
}

ExactSolution pushforward_solution(const PointTransformation& psi, const ExactSolution& sol) {
  ExactSolution out;
  out.p = sol.p;
  out.q = sol.q;
  out.at = [psi, sol](long m, long n) { return apply(psi, sol.at(m, n)); };
  return out;
}

PointTransformation identity_transformation(int p, int q) {
  PointTransformation t;
  t.name = "identity";
  t.p = p;
  t.q = q;
  t.forward = [](const SpacePoint& pt) { return pt; };
  t.inverse = [](const SpacePoint& pt) { return pt; };
  t.jacobian = [p, q](const SpacePoint&) {
    return Eigen::MatrixXd::Identity(p + q, p + q);
  };
  return t;
}

PointTransformation hodograph_transformation(int p) {
  PointTransformation t;
  t.name = "hodograph";
  t.p = p;
  t.q = 1;
  auto swap_xu = [](const SpacePoint& pt) {
    SpacePoint out = pt;
    std::swap(out.x[0], out.u[0]);
    return out;
  };
  t.forward = swap_xu;
  t.inverse = swap_xu;  // involution
  const int dim = p + 1;
  t.jacobian = [dim, p](const SpacePoint&) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Identity(dim, dim);
    jac(0, 0) = 0.0;
    jac(p, p) = 0.0;
    jac(0, p) = 1.0;
    jac(p, 0) = 1.0;
    return jac;
  };
  return t;
}

PointTransformation characteristic_transformation() {
  PointTransformation t;
  t.name = "characteristic";
  t.p = 2;
  t.q = 1;
  t.forward = [](const SpacePoint& pt) {
    SpacePoint out = pt;
    out.x[0] = pt.x[0] + pt.x[1];
    out.x[1] = pt.x[0] - pt.x[1];
    return out;
  };
  t.inverse = [](const SpacePoint& pt) {
    SpacePoint out = pt;
    out.x[0] = 0.5 * (pt.x[0] + pt.x[1]);
    out.x[1] = 0.5 * (pt.x[0] - pt.x[1]);
    return out;
  };
  t.jacobian = [](const SpacePoint&) {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Identity(3, 3);
    jac(0, 0) = 1.0;
    jac(0, 1) = 1.0;
    jac(1, 0) = 1.0;
    jac(1, 1) = -1.0;
    return jac;
  };
  return t;
}

PointTransformation polar_transformation() {
  PointTransformation t;
  t.name = "polar";
  t.p = 2;
  t.q = 1;
  t.forward = [](const SpacePoint& pt) {
    SpacePoint out = pt;
    out.x[0] = pt.x[0] * std::cos(pt.x[1]);
    out.x[1] = pt.x[0] * std::sin(pt.x[1]);
    return out;
  };
  t.inverse = [](const SpacePoint& pt) {
    SpacePoint out = pt;
    out.x[0] = std::hypot(pt.x[0], pt.x[1]);
    out.x[1] = std::atan2(pt.x[1], pt.x[0]);
    return out;
  };
  t.forward_domain = [](const SpacePoint& pt) { return pt.x[0] > 0.0; };
  t.inverse_domain = [](const SpacePoint& pt) {
    return pt.x[0] != 0.0 || pt.x[1] != 0.0;
  };
  t.jacobian = [](const SpacePoint& pt) {
    const double r = pt.x[0], th = pt.x[1];
    Eigen::MatrixXd jac = Eigen::MatrixXd::Identity(3, 3);
    jac(0, 0) = std::cos(th);
    jac(0, 1) = -r * std::sin(th);
    jac(1, 0) = std::sin(th);
    jac(1, 1) = r * std::cos(th);
    return jac;
  };
  return t;
}

PointTransformation transformation_by_id(const std::string& id, int p, int q) {
  if (id == "identity") return identity_transformation(p, q);
  if (id == "hodograph") return hodograph_transformation(p);
  if (id == "characteristic") return characteristic_transformation();
  if (id == "polar") return polar_transformation();
  throw ConfigError("unknown transformation '" + id + "'");
}

}  // namespace symm
