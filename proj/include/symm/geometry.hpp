#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "symm/errors.hpp"

namespace symm {

using Vec = std::vector<double>;

// Integer multi-index relative to a stencil base point; length p (1 or 2).
struct Offset {
  std::vector<int> entries;

  bool operator==(const Offset& o) const { return entries == o.entries; }
  bool operator<(const Offset& o) const { return entries < o.entries; }
  bool is_zero() const;
};

// One lattice point: p independent coordinates x and q dependent values u.
struct SpacePoint {
  Vec x;
  Vec u;

  bool finite() const;
};

// Ordered, labelled set of offsets.  The zero offset is always a member and
// the ordering is fixed: flattened coordinate vectors, prolonged-field rows
// and the rank computation all depend on it.
class StencilTemplate {
public:
  StencilTemplate() = default;
  StencilTemplate(std::vector<Offset> offsets, std::vector<std::string> labels);

  std::size_t size() const { return offsets_.size(); }
  const std::vector<Offset>& offsets() const { return offsets_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t index_of(const std::string& label) const;  // throws MissingLabel
  bool has_label(const std::string& label) const;

  bool operator==(const StencilTemplate& o) const {
    return offsets_ == o.offsets_ && labels_ == o.labels_;
  }

private:
  std::vector<Offset> offsets_;
  std::vector<std::string> labels_;
};

// A template together with one point per offset.  Flattening order is
// (x-block then u-block) per point, points in template order.
class StencilConfig {
public:
  StencilConfig() = default;
  StencilConfig(StencilTemplate tmpl, std::vector<SpacePoint> points);

  const StencilTemplate& stencil_template() const { return tmpl_; }
  std::size_t size() const { return points_.size(); }
  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t dim() const { return points_.size() * static_cast<std::size_t>(p_ + q_); }

  const SpacePoint& point(std::size_t i) const { return points_[i]; }
  const SpacePoint& point(const std::string& label) const {
    return points_[tmpl_.index_of(label)];
  }
  const std::vector<SpacePoint>& points() const { return points_; }

  double x(const std::string& label, int axis = 0) const { return point(label).x[axis]; }
  double u(const std::string& label, int comp = 0) const { return point(label).u[comp]; }

  Vec flatten() const;
  static StencilConfig unflatten(const StencilTemplate& tmpl, int p, int q, const Vec& coords);

private:
  StencilTemplate tmpl_;
  std::vector<SpacePoint> points_;
  int p_ = 0;
  int q_ = 0;
};

// Step quantities between labelled neighbours of the base point "0".
// Keys are "dx<i>_plus", "dx<i>_minus", "dx<i>_hat", "dx<i>_check" with the
// axis index i in 1..p; only the labels present in the template are emitted.
// dx_plus = x(+)-x(0), dx_minus = x(0)-x(-), dx_hat = x(hat)-x(0),
// dx_check = x(0)-x(check).
std::map<std::string, double> steps(const StencilConfig& config);

// Single named step; throws MissingLabel when the underlying label is absent.
double step(const StencilConfig& config, const std::string& name);

// Scalar function of a stencil configuration (residuals, invariants).
using ConfigFn = std::function<double(const StencilConfig&)>;

}  // namespace symm
