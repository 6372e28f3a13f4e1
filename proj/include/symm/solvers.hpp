#pragma once

#include "symm/catalog.hpp"
#include "symm/scheme.hpp"

namespace symm {

// Endpoint treatment for layer marches; the schemes themselves say nothing
// about boundaries.
struct BoundaryPolicy {
  enum class Kind { ExactTrace, FixedValue, CopyStep };
  Kind kind = Kind::CopyStep;
  // ExactTrace: closed form queried at (layer index, node index).
  std::function<SpacePoint(long m, long n)> trace;
  double fixed_value = 0.0;
};

struct MarchState {
  std::vector<SpacePoint> layer;  // current flat-time layer
  long m = 0;                     // layer index, used by trace boundaries
  double tau = 0.0;
  BoundaryPolicy boundary;
  int halvings = 0;  // total automatic step halvings so far
};

// Fixed-step march of a two-point ODE scheme.  The two residuals are solved
// for the next point by damped 2-d Newton with finite-difference Jacobian
// (tol 1e-14 on the residuals, 50 iterations); built-in schemes converge to
// machine precision.  Throws RootFindFailed.
SolutionGrid march_ode(const Scheme& scheme, double x0, double u0, long n_steps);

// One explicit layer advance of the evolving-lattice parabolic schemes: the
// node drift comes from the mesh equation, the new value from the positive
// branch of the ratio equation.  StepTooLarge triggers automatic tau halving
// (up to 4 times) before failing.
MarchState advance_heat_layer(const MarchState& state);
MarchState advance_nonlinear_heat_layer(const MarchState& state);

SolutionGrid march_heat(const MarchState& initial, long n_steps, bool hodograph_roles = false);

// Characteristic-quadrant march: initial data on the first row (constant
// second coordinate) and first column (constant first coordinate) of the
// rectangular lattice y = eps*n + y0, z = delta*m + z0; the interior is
// filled by solving the scheme's equation for the corner unknown (affine).
// delta is the signed z-step.
SolutionGrid march_wave(const Scheme& scheme, const std::vector<double>& row0,
                        const std::vector<double>& col0, double eps, double delta, double y0,
                        double z0);
// The same lattice mapped back to the original variables (rotated 45 deg).
SolutionGrid wave_grid_to_xt(const SolutionGrid& yz);

struct AnnulusSpec {
  double r0 = 1.0;
  int n_r = 64;     // radial intervals; nodes 0..n_r
  int n_theta = 64;  // angular lines
  double theta0 = 0.0;
  bool periodic = true;  // requires scheme delta = 2*pi / n_theta
};

struct EllipticResult {
  SolutionGrid grid;
  int sweeps = 0;
  double final_update = 0.0;
  // Max |residual| / |diagonal coefficient| after convergence.
  double scaled_residual = 0.0;
  bool converged = false;
};

// Picard / symmetric Gauss-Seidel iteration for the polar elliptic scheme
// (one forward and one backward pass per sweep, source lagged).  Dirichlet
// data at the inner and outer radius; theta periodic.  Starts from the
// log-radial interpolation of the boundary data.  Throws NotConverged after
// max_sweeps.
EllipticResult solve_elliptic(const Scheme& scheme, const AnnulusSpec& annulus,
                              const std::function<double(double)>& inner_data,
                              const std::function<double(double)>& outer_data, int max_sweeps,
                              double tol);

// Applies the flow of a field to every point of a layer.
std::vector<SpacePoint> flow_layer(const VectorField& v, const std::vector<SpacePoint>& layer,
                                   double eps);

}  // namespace symm
