#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symm/flow.hpp"
#include "symm/rng.hpp"
#include "symm/vector_field.hpp"

namespace symm {

// Draws stencil configurations for verification suites.  When constraints
// are present, draw() must return configurations satisfying every one of
// them to 1e-12 (manifolds are built by construction, not projection).
struct ConfigSampler {
  StencilTemplate tmpl;
  int p = 0;
  int q = 0;
  std::vector<ConfigFn> constraints;
  std::function<StencilConfig(Rng&)> draw;
};

// Numeric pr V[f]: sum over flattened slots of (prolonged coefficient times
// central finite-difference partial of f), step max(1e-7, 1e-7*|slot|).
double directional_derivative(const ProlongedField& pv, const ConfigFn& f,
                              const StencilConfig& config);

struct CheckEntry {
  std::string generator;
  std::string subject;
  int n_samples = 0;
  int n_escaped = 0;  // finite checks only: flows that left the domain
  double max_violation = 0.0;
  bool pass = false;
};

struct InvarianceReport {
  std::string kind;
  double tol = 0.0;
  std::vector<CheckEntry> entries;
  bool pass = true;

  void add(CheckEntry e) {
    pass = pass && e.pass;
    entries.push_back(std::move(e));
  }
};

// max |pr V_k[f]| over samples, per generator; PASS iff all below tol.
InvarianceReport check_strong_invariance(const ConfigFn& f, const std::string& subject,
                                         const SymmetryAlgebra& algebra,
                                         const ConfigSampler& sampler, int n_samples, Rng& rng,
                                         double tol = 1e-6);

// Same, but samples must lie on the manifold E = 0; a sample with
// |E| >= 1e-12 raises SamplerViolatesManifold.
InvarianceReport check_weak_invariance(const ConfigFn& E, const std::string& subject,
                                       const SymmetryAlgebra& algebra,
                                       const ConfigSampler& sampler, int n_samples, Rng& rng,
                                       double tol = 1e-6);

// |f(prolonged_flow(V, c, eps)) - f(c)| over the eps sweep.  Flows that
// escape the field's domain are recorded per sample, not failed.
InvarianceReport check_finite_invariance(const ConfigFn& f, const std::string& subject,
                                         const SymmetryAlgebra& algebra,
                                         const ConfigSampler& sampler,
                                         const std::vector<double>& eps_sweep, int n_samples,
                                         Rng& rng, double tol = 1e-8);

inline std::vector<double> default_eps_sweep() { return {-0.2, -0.05, 0.05, 0.2}; }

}  // namespace symm
