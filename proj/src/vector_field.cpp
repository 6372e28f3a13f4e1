#include "symm/vector_field.hpp"

namespace symm {

Vec VectorField::coefficients(const SpacePoint& pt) const {
  Vec out = xi(pt.x, pt.u);
  Vec ph = phi(pt.x, pt.u);
  out.insert(out.end(), ph.begin(), ph.end());
  return out;
}

Vec ProlongedField::coefficients(const StencilConfig& config) const {
  Vec out;
  out.reserve(config.dim());
  for (std::size_t i = 0; i < config.size(); ++i) {
    Vec c = base_.coefficients(config.point(i));
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

VectorField make_field(std::string name, int, int,
                       std::function<Vec(const Vec&, const Vec&)> xi,
                       std::function<Vec(const Vec&, const Vec&)> phi) {
  return VectorField{std::move(name), std::move(xi), std::move(phi)};
}

VectorField translation_x(int p, int q, int axis, std::string name) {
  return VectorField{std::move(name),
                     [p, axis](const Vec&, const Vec&) {
                       Vec v(p, 0.0);
                       v[axis] = 1.0;
                       return v;
                     },
                     [q](const Vec&, const Vec&) { return Vec(q, 0.0); }};
}

VectorField scaling_u(int p, int q, int comp, std::string name) {
  return VectorField{std::move(name),
                     [p](const Vec&, const Vec&) { return Vec(p, 0.0); },
                     [q, comp](const Vec&, const Vec& u) {
                       Vec v(q, 0.0);
                       v[comp] = u[comp];
                       return v;
                     }};
}

}  // namespace symm
