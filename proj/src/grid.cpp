#include "symm/grid.hpp"

#include <cmath>
#include <cstdio>

namespace symm {

namespace {
constexpr double kFlatRowTol = 1e-12;

void append_value(std::string& line, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += ',';
  line += buf;
}
}  // namespace

void SolutionGrid::set(std::size_t m, std::size_t n, SpacePoint pt) {
  rows_[m][n] = std::move(pt);
}

void SolutionGrid::append_row(std::vector<SpacePoint> row) {
  rows_.push_back(std::move(row));
}

void SolutionGrid::validate() const {
  for (std::size_t m = 0; m < rows_.size(); ++m) {
    const auto& row = rows_[m];
    for (const auto& pt : row) {
      if (!pt.finite()) throw DomainViolation("non-finite grid point in row " + std::to_string(m));
    }
    const double dir = row.size() > 1 && row[1].x[0] < row[0].x[0] ? -1.0 : 1.0;
    for (std::size_t n = 1; n < row.size(); ++n) {
      if (!(dir * (row[n].x[0] - row[n - 1].x[0]) > 0.0))
        throw MeshTangled("row " + std::to_string(m) + " not strictly monotone in x1 at n=" +
                          std::to_string(n));
      if (flat_rows_ && p_ >= 2 && std::abs(row[n].x[1] - row[0].x[1]) > kFlatRowTol)
        throw MeshTangled("row " + std::to_string(m) + " is not flat in x2");
    }
  }
}

StencilConfig build_stencil(const SolutionGrid& grid, long m, long n,
                            const StencilTemplate& tmpl) {
  std::vector<SpacePoint> pts;
  pts.reserve(tmpl.size());
  for (const auto& off : tmpl.offsets()) {
    long mm = m, nn = n;
    if (off.entries.size() == 1) {
      mm = m + off.entries[0];
    } else {
      mm = m + off.entries[0];
      nn = n + off.entries[1];
    }
    if (mm < 0 || mm >= static_cast<long>(grid.rows()) || nn < 0 ||
        nn >= static_cast<long>(grid.cols(static_cast<std::size_t>(mm))))
      throw MissingNeighbor("offset falls outside the grid at base (" + std::to_string(m) + "," +
                            std::to_string(n) + ")");
    pts.push_back(grid.at(static_cast<std::size_t>(mm), static_cast<std::size_t>(nn)));
  }
  return StencilConfig(tmpl, std::move(pts));
}

void write_stencil(SolutionGrid& grid, long m, long n, const StencilConfig& config) {
  const auto& tmpl = config.stencil_template();
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    const auto& off = tmpl.offsets()[i];
    long mm = m + off.entries[0];
    long nn = off.entries.size() > 1 ? n + off.entries[1] : n;
    if (mm < 0 || mm >= static_cast<long>(grid.rows()) || nn < 0 ||
        nn >= static_cast<long>(grid.cols(static_cast<std::size_t>(mm))))
      throw MissingNeighbor("write_stencil offset outside grid");
    grid.set(static_cast<std::size_t>(mm), static_cast<std::size_t>(nn), config.point(i));
  }
}

void write_grid_csv(std::ostream& os, const SolutionGrid& grid,
                    const std::vector<std::string>& x_names,
                    const std::vector<std::string>& u_names) {
  std::string header = "m,n";
  for (const auto& s : x_names) header += "," + s;
  for (const auto& s : u_names) header += "," + s;
  os << header << '\n';
  for (std::size_t m = 0; m < grid.rows(); ++m) {
    for (std::size_t n = 0; n < grid.cols(m); ++n) {
      std::string line = std::to_string(m) + "," + std::to_string(n);
      const auto& pt = grid.at(m, n);
      for (double v : pt.x) append_value(line, v);
      for (double v : pt.u) append_value(line, v);
      os << line << '\n';
    }
  }
}

void write_grid_csv(std::ostream& os, const SolutionGrid& grid) {
  std::vector<std::string> xs, us;
  for (int i = 0; i < grid.p(); ++i) xs.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < grid.q(); ++i) us.push_back("u" + std::to_string(i + 1));
  write_grid_csv(os, grid, xs, us);
}

}  // namespace symm
