#pragma once

#include "symm/catalog.hpp"

namespace symm {

// One refinement level: the scheme instantiated at this level's steps and a
// set of solution-sampled stencils whose mesh equations hold by construction.
struct ConsistencyLevel {
  double step = 0.0;
  Scheme scheme;
  std::vector<StencilConfig> configs;
};

struct ConsistencyStudy {
  std::string name;
  int n_levels = 4;
  std::function<ConsistencyLevel(int)> level;  // level 0 is the coarsest
};

struct OrderReport {
  std::vector<double> steps;
  std::vector<double> residuals;
  double slope = 0.0;
  // Residuals at the machine floor (exact discrete solution); the slope is
  // meaningless in that case.
  bool exact = false;
};

// Measures the scaled equation residuals of a smooth continuum solution over
// the refinement levels and fits the log-log slope.
OrderReport consistency_order(const ConsistencyStudy& study);

struct CommuteReport {
  OrderReport original;
  OrderReport transformed;
  double min_order = 0.0;
  bool pass = false;
};

// Both sides of the continuous-limit square: the original scheme against its
// equation and the transformed scheme against the transformed equation.
CommuteReport check_commuting_diagram(const ConsistencyStudy& original,
                                      const ConsistencyStudy& transformed,
                                      double required_order = 1.0, double slack = 0.2);

// Study factories.  The parabolic pair samples u = 2 + exp(-t) sin x on a
// monotone branch and its image v = arcsin((y-2) exp(t)); the hyperbolic
// pair samples u = exp(y+z) (source F(u) = u) and its image exp(2x).
ConsistencyStudy heat_consistency_study();
ConsistencyStudy nonlinear_heat_consistency_study();
ConsistencyStudy standard_heat_consistency_study();
ConsistencyStudy heat_exact_family_study();
ConsistencyStudy wave_yz_consistency_study();
ConsistencyStudy wave_xt_consistency_study();
ConsistencyStudy polar_consistency_study();
ConsistencyStudy consistency_study_by_id(const std::string& id);

}  // namespace symm
