#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symm/geometry.hpp"

namespace symm {

// Infinitesimal generator of a one-parameter group of point transformations:
// xi gives the coefficients on the independent variables, phi on the
// dependent ones.  Evaluators must be deterministic and finite on the
// declared domain.
struct VectorField {
  std::string name;
  std::function<Vec(const Vec& x, const Vec& u)> xi;
  std::function<Vec(const Vec& x, const Vec& u)> phi;

  // Stacked coefficient vector (xi then phi) at one point.
  Vec coefficients(const SpacePoint& pt) const;
};

struct SymmetryAlgebra {
  int p = 0;
  int q = 0;
  std::vector<VectorField> fields;
};

// Discrete prolongation: the base field evaluated independently at every
// stencil point.  Stencil points are never re-indexed.
class ProlongedField {
public:
  ProlongedField(VectorField base, StencilTemplate tmpl)
      : base_(std::move(base)), tmpl_(std::move(tmpl)) {}

  const VectorField& base() const { return base_; }
  const StencilTemplate& stencil_template() const { return tmpl_; }

  // Coefficient row in flattened-configuration order.
  Vec coefficients(const StencilConfig& config) const;

private:
  VectorField base_;
  StencilTemplate tmpl_;
};

inline ProlongedField prolong(const VectorField& v, const StencilTemplate& tmpl) {
  return ProlongedField(v, tmpl);
}

// Convenience constructors for the coefficient shapes used throughout.
VectorField make_field(std::string name, int p, int q,
                       std::function<Vec(const Vec&, const Vec&)> xi,
                       std::function<Vec(const Vec&, const Vec&)> phi);

// d/dx^axis (translation of one independent variable).
VectorField translation_x(int p, int q, int axis, std::string name);
// u^comp d/du^comp (scaling of one dependent variable).
VectorField scaling_u(int p, int q, int comp, std::string name);

}  // namespace symm
