#pragma once

#include <map>
#include <string>
#include <vector>

#include "symm/grid.hpp"
#include "symm/vector_field.hpp"

namespace symm {

// A finite-difference scheme over a stencil template: the first n_de
// residuals approximate the differential equation, the remaining ones
// constrain the mesh.  Residuals are plain functions of a configuration;
// transformed schemes compose them with the inverse point map.
struct Scheme {
  std::string name;
  int p = 0;
  int q = 0;
  StencilTemplate tmpl;
  std::vector<ConfigFn> residuals;
  std::vector<std::string> residual_names;
  int n_de = 1;
  SymmetryAlgebra algebra;
  // False for the standard comparison discretizations, which keep only a
  // subalgebra of the target equation's symmetries.
  bool invariant = true;
  // Scale factor such that de-residual / scale approximates the differential
  // equation pointwise in the continuous limit; used by order measurement.
  ConfigFn de_scale;
  std::map<std::string, double> params;
};

// All residual values at a configuration, in declaration order.
Vec residuals(const Scheme& scheme, const StencilConfig& config);
double max_abs_residual(const Scheme& scheme, const StencilConfig& config);

// Discrete exact solution: closed-form lattice position and value per index.
struct ExactSolution {
  int p = 0;
  int q = 0;
  std::function<SpacePoint(long m, long n)> at;
};

SolutionGrid sample_solution(const ExactSolution& sol, long m_count, long n_count,
                             bool flat_rows = false);

// Max |residual| of the scheme over every grid base index where the full
// stencil exists.
double max_residual_on_grid(const Scheme& scheme, const SolutionGrid& grid);

}  // namespace symm
