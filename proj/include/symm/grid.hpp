#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "symm/geometry.hpp"

namespace symm {

// Tensor-indexed lattice of points with solution values.  Rows are indexed
// by m (time layer / angular line / march step), entries within a row by n.
// ODE trajectories use one point per row.
class SolutionGrid {
public:
  SolutionGrid() = default;
  SolutionGrid(int p, int q, bool flat_rows = false) : p_(p), q_(q), flat_rows_(flat_rows) {}

  int p() const { return p_; }
  int q() const { return q_; }
  bool flat_rows() const { return flat_rows_; }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols(std::size_t m) const { return rows_[m].size(); }

  const SpacePoint& at(std::size_t m, std::size_t n = 0) const { return rows_[m][n]; }
  void set(std::size_t m, std::size_t n, SpacePoint pt);
  void append_row(std::vector<SpacePoint> row);
  const std::vector<SpacePoint>& row(std::size_t m) const { return rows_[m]; }

  // Checks finiteness, strict monotonicity of x1 within each row
  // (MeshTangled otherwise) and, when flat_rows is set, that x2 is constant
  // within each row to 1e-12.
  void validate() const;

private:
  int p_ = 0;
  int q_ = 0;
  bool flat_rows_ = false;
  std::vector<std::vector<SpacePoint>> rows_;
};

// Reads the stencil for the template at base index (m, n) from the grid.
// Offsets are (dm) for p=1-indexed grids and (dm, dn) otherwise.
// Throws MissingNeighbor when an offset leaves the grid.
StencilConfig build_stencil(const SolutionGrid& grid, long m, long n,
                            const StencilTemplate& tmpl);

// Writes a stencil's points back into the grid at base (m, n).
void write_stencil(SolutionGrid& grid, long m, long n, const StencilConfig& config);

// CSV snapshot: header "m,n,<x names>,<u names>", one row per point,
// '.' decimal separator, %.17g values.
void write_grid_csv(std::ostream& os, const SolutionGrid& grid,
                    const std::vector<std::string>& x_names,
                    const std::vector<std::string>& u_names);
void write_grid_csv(std::ostream& os, const SolutionGrid& grid);

}  // namespace symm
