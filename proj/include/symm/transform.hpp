#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

#include "symm/scheme.hpp"
#include "symm/vector_field.hpp"

namespace symm {

// Invertible point transformation of the joint (x, u) space.  Built-in
// transformations ship analytic inverses and Jacobians; user-defined ones
// may omit the Jacobian, in which case conjugation falls back to finite
// differences of the forward map.
struct PointTransformation {
  std::string name;
  int p = 0;
  int q = 0;
  std::function<SpacePoint(const SpacePoint&)> forward;
  std::function<SpacePoint(const SpacePoint&)> inverse;
  // Total derivative of forward, rows/cols ordered (x-block, u-block).
  std::function<Eigen::MatrixXd(const SpacePoint&)> jacobian;
  std::function<bool(const SpacePoint&)> forward_domain;  // defaults to all
  std::function<bool(const SpacePoint&)> inverse_domain;
};

SpacePoint apply(const PointTransformation& psi, const SpacePoint& pt);
SpacePoint apply_inverse(const PointTransformation& psi, const SpacePoint& pt);

// Pointwise application to every stencil point; template preserved.
StencilConfig pushforward_stencil(const PointTransformation& psi, const StencilConfig& config);
StencilConfig pullback_stencil(const PointTransformation& psi, const StencilConfig& config);

// Transformed invariant: the original composed with the inverse map at every
// point.  Equal by construction to evaluating the original on the pulled-back
// configuration.
ConfigFn pushforward_invariant(const PointTransformation& psi, const ConfigFn& f);

// Transformed scheme: every residual composed with the inverse map pointwise;
// the symmetry algebra is conjugated alongside.
Scheme pushforward_scheme(const PointTransformation& psi, const Scheme& scheme);

// d(psi) V: coefficients at a transformed point equal the Jacobian applied to
// the original coefficients at the preimage.
VectorField conjugate_field(const PointTransformation& psi, const VectorField& v);
SymmetryAlgebra conjugate_algebra(const PointTransformation& psi, const SymmetryAlgebra& a);

// Transports a discrete exact solution: the point at each index is mapped.
ExactSolution pushforward_solution(const PointTransformation& psi, const ExactSolution& sol);

// Built-in transformations.
PointTransformation identity_transformation(int p, int q);
// Swaps the first independent variable with the (single) dependent one.
PointTransformation hodograph_transformation(int p);
// (x, t) -> (x + t, x - t), u unchanged.
PointTransformation characteristic_transformation();
// (r, theta) -> (r cos theta, r sin theta), u unchanged; the inverse chart
// pins theta to (-pi, pi] via atan2 and excludes r <= 0.
PointTransformation polar_transformation();
PointTransformation transformation_by_id(const std::string& id, int p, int q);

}  // namespace symm
