#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symm/catalog.hpp"
#include "symm/consistency.hpp"
#include "symm/flow.hpp"
#include "symm/rank.hpp"
#include "symm/solvers.hpp"
#include "symm/transform.hpp"

namespace py = pybind11;
using namespace symm;

namespace {

// Points come in as rows of p+q floats (x block then u block) in template
// order; the flattened layout shared with the rank computation.
StencilConfig config_from_rows(const StencilTemplate& tmpl, int p, int q,
                               const std::vector<std::vector<double>>& rows) {
  if (rows.size() != tmpl.size())
    throw ConfigError("expected " + std::to_string(tmpl.size()) + " stencil points");
  Vec flat;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != p + q)
      throw ConfigError("each point needs p+q coordinates");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return StencilConfig::unflatten(tmpl, p, q, flat);
}

py::dict invariance_to_dict(const InvarianceReport& r) {
  py::dict out;
  out["kind"] = r.kind;
  out["pass"] = r.pass;
  py::list checks;
  for (const auto& e : r.entries) {
    py::dict c;
    c["generator"] = e.generator;
    c["subject"] = e.subject;
    c["n_samples"] = e.n_samples;
    c["max_violation"] = e.max_violation;
    c["pass"] = e.pass;
    checks.append(c);
  }
  out["checks"] = checks;
  return out;
}

py::list grid_to_list(const SolutionGrid& grid) {
  py::list rows;
  for (std::size_t m = 0; m < grid.rows(); ++m) {
    py::list row;
    for (std::size_t n = 0; n < grid.cols(m); ++n) {
      const auto& pt = grid.at(m, n);
      py::list entry;
      for (double v : pt.x) entry.append(v);
      for (double v : pt.u) entry.append(v);
      row.append(entry);
    }
    rows.append(row);
  }
  return rows;
}

SchemeParams params_from_kwargs(double eps, double delta, double tau, double h,
                                const std::string& A, const std::string& B,
                                const std::string& F) {
  SchemeParams p;
  p.eps = eps;
  p.delta = delta;
  p.tau = tau;
  p.h = h;
  p.A = named_scalar_fn(A);
  p.B = named_scalar_fn(B);
  p.F = named_scalar_fn(F);
  p.F_source = named_source_fn(F);
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "symmetry-preserving finite-difference schemes";

  py::register_exception<Error>(m, "SymmError");

  py::class_<InvariantFamily>(m, "InvariantFamily")
      .def_readonly("name", &InvariantFamily::name)
      .def_property_readonly("member_names",
                             [](const InvariantFamily& f) {
                               std::vector<std::string> names;
                               for (const auto& [n, fn] : f.members) names.push_back(n);
                               return names;
                             })
      .def_property_readonly("generator_names",
                             [](const InvariantFamily& f) {
                               std::vector<std::string> names;
                               for (const auto& v : f.algebra.fields) names.push_back(v.name);
                               return names;
                             })
      .def("evaluate",
           [](const InvariantFamily& f, const std::string& member,
              const std::vector<std::vector<double>>& rows) {
             for (const auto& [n, fn] : f.members)
               if (n == member) return fn(config_from_rows(f.tmpl, f.p, f.q, rows));
             throw ConfigError("no member '" + member + "'");
           },
           py::arg("member"), py::arg("points"))
      .def("sample", [](const InvariantFamily& f, std::uint64_t seed) {
             Rng rng(seed);
             StencilConfig c = f.sampler.draw(rng);
             std::vector<std::vector<double>> rows;
             for (std::size_t i = 0; i < c.size(); ++i) {
               std::vector<double> row(c.point(i).x);
               row.insert(row.end(), c.point(i).u.begin(), c.point(i).u.end());
               rows.push_back(std::move(row));
             }
             return rows;
           },
           py::arg("seed") = 1)
      .def("strong_invariance",
           [](const InvariantFamily& f, int n_samples, std::uint64_t seed, double tol) {
             Rng rng(seed);
             py::dict out;
             bool pass = true;
             for (const auto& [name, fn] : f.members) {
               auto r = check_strong_invariance(fn, name, f.algebra, f.sampler, n_samples,
                                                rng, tol);
               pass = pass && r.pass;
               out[name.c_str()] = invariance_to_dict(r);
             }
             out["pass"] = pass;
             return out;
           },
           py::arg("n_samples") = 100, py::arg("seed") = 1, py::arg("tol") = 1e-6)
      .def("invariant_count",
           [](const InvariantFamily& f, int n_samples, std::uint64_t seed) {
             Rng rng(seed);
             RankReport r = invariant_count(f.algebra, rank_sampler(f.name), n_samples, rng);
             py::dict out;
             out["dim_flat"] = r.dim_flat;
             out["dim_manifold"] = r.dim_manifold;
             out["rank"] = r.rank;
             out["mu"] = r.mu;
             out["stable"] = r.stable;
             return out;
           },
           py::arg("n_samples") = 50, py::arg("seed") = 1);

  m.def("invariant_family", &family_by_id, py::arg("id"),
        "catalogued family: linear-ode, heat, nl-heat, wave-yz, wave-xt");

  py::class_<Scheme>(m, "Scheme")
      .def_readonly("name", &Scheme::name)
      .def_readonly("invariant", &Scheme::invariant)
      .def_property_readonly("residual_names",
                             [](const Scheme& s) { return s.residual_names; })
      .def("residuals",
           [](const Scheme& s, const std::vector<std::vector<double>>& rows) {
             return residuals(s, config_from_rows(s.tmpl, s.p, s.q, rows));
           },
           py::arg("points"))
      .def("weak_invariance",
           [](const Scheme& s, int n_samples, std::uint64_t seed, double tol) {
             Rng rng(seed);
             ConfigSampler sampler = scheme_manifold_sampler(s);
             py::dict out;
             bool pass = true;
             for (std::size_t k = 0; k < s.residuals.size(); ++k) {
               auto r = check_weak_invariance(s.residuals[k], s.residual_names[k], s.algebra,
                                              sampler, n_samples, rng, tol);
               pass = pass && r.pass;
               out[s.residual_names[k].c_str()] = invariance_to_dict(r);
             }
             out["pass"] = pass;
             return out;
           },
           py::arg("n_samples") = 100, py::arg("seed") = 1, py::arg("tol") = 1e-6);

  m.def("scheme",
        [](const std::string& id, double eps, double delta, double tau, double h,
           const std::string& A, const std::string& B, const std::string& F) {
          return scheme_by_id(id, params_from_kwargs(eps, delta, tau, h, A, B, F));
        },
        py::arg("id"), py::arg("eps") = 0.1, py::arg("delta") = 0.1, py::arg("tau") = 0.01,
        py::arg("h") = 0.1, py::arg("A") = "zero", py::arg("B") = "id", py::arg("F") = "zero",
        "catalogued scheme by id, e.g. heat, nl-heat, wave-yz, polar, heat-standard");

  m.def("transform_point",
        [](const std::string& id, const std::vector<double>& x, const std::vector<double>& u,
           bool inverse) {
          PointTransformation psi =
              transformation_by_id(id, static_cast<int>(x.size()), static_cast<int>(u.size()));
          SpacePoint out = inverse ? apply_inverse(psi, {x, u}) : apply(psi, {x, u});
          return py::make_tuple(out.x, out.u);
        },
        py::arg("id"), py::arg("x"), py::arg("u"), py::arg("inverse") = false,
        "apply a named point transformation: identity, hodograph, characteristic, polar");

  m.def("pushforward_residual_gap",
        [](std::uint64_t seed, int n_samples) {
          // Max deviation between the hodograph pushforward of the linear
          // heat scheme and the hand-coded transformed scheme.
          Rng rng(seed);
          Scheme pushed = pushforward_scheme(hodograph_transformation(2), heat_scheme(0.01));
          Scheme image = nonlinear_heat_scheme(0.01);
          auto sampler = nonlinear_heat_invariants().sampler;
          double worst = 0.0;
          for (int i = 0; i < n_samples; ++i) {
            StencilConfig c = sampler.draw(rng);
            for (std::size_t k = 0; k < image.residuals.size(); ++k)
              worst = std::max(worst,
                               std::abs(pushed.residuals[k](c) - image.residuals[k](c)));
          }
          return worst;
        },
        py::arg("seed") = 1, py::arg("n_samples") = 50);

  m.def("flow_point",
        [](const std::string& family_id, int generator, const std::vector<double>& x,
           const std::vector<double>& u, double eps) {
          InvariantFamily fam = family_by_id(family_id);
          if (generator < 0 || generator >= static_cast<int>(fam.algebra.fields.size()))
            throw ConfigError("generator index out of range");
          SpacePoint out = flow(fam.algebra.fields[generator], {x, u}, eps);
          return py::make_tuple(out.x, out.u);
        },
        py::arg("family"), py::arg("generator"), py::arg("x"), py::arg("u"), py::arg("eps"),
        "advance a point along a catalogued generator's one-parameter group");

  m.def("march_heat",
        [](const std::string& family, double h, double tau, double x0, double t0, double c,
           double K, long nodes, long steps, bool hodograph_roles) {
          ExactSolution sol = family == "fundamental"
                                  ? heat_fundamental_solution(h, x0, t0, tau)
                                  : heat_exponential_solution(h, x0, t0, tau, c, K);
          if (hodograph_roles) sol = pushforward_solution(hodograph_transformation(2), sol);
          MarchState state;
          for (long n = 0; n < nodes; ++n) state.layer.push_back(sol.at(0, n));
          state.tau = tau;
          state.boundary.kind = BoundaryPolicy::Kind::ExactTrace;
          state.boundary.trace = [sol](long mm, long nn) { return sol.at(mm, nn); };
          return grid_to_list(march_heat(state, steps, hodograph_roles));
        },
        py::arg("family") = "exp", py::arg("h") = 0.1, py::arg("tau") = 0.002,
        py::arg("x0") = 0.0, py::arg("t0") = 1.0, py::arg("c") = 1.0, py::arg("K") = 1.0,
        py::arg("nodes") = 20, py::arg("steps") = 20, py::arg("hodograph_roles") = false,
        "march an exact family on its evolving lattice; rows of [x, t, u]");

  m.def("solve_elliptic",
        [](int n_r, int n_theta, double r0, double r1, const std::string& boundary,
           int max_sweeps, double tol) {
          const double eps = (r1 - r0) / n_r;
          Scheme scheme =
              polar_laplace_scheme(named_source_fn("zero"), eps, 2.0 * M_PI / n_theta);
          AnnulusSpec annulus{r0, n_r, n_theta, 0.0, true};
          std::function<double(double)> inner, outer;
          if (boundary == "log-trace") {
            inner = [r0](double) { return std::log(r0); };
            outer = [r1](double) { return std::log(r1); };
          } else {
            inner = [](double) { return 0.0; };
            outer = [](double th) { return std::cos(th); };
          }
          EllipticResult r = solve_elliptic(scheme, annulus, inner, outer, max_sweeps, tol);
          py::dict out;
          out["sweeps"] = r.sweeps;
          out["converged"] = r.converged;
          out["scaled_residual"] = r.scaled_residual;
          out["grid"] = grid_to_list(r.grid);
          return out;
        },
        py::arg("n_r") = 32, py::arg("n_theta") = 32, py::arg("r0") = 1.0, py::arg("r1") = 2.0,
        py::arg("boundary") = "log-trace", py::arg("max_sweeps") = 5000,
        py::arg("tol") = 1e-10);

  m.def("consistency_order",
        [](const std::string& id) {
          OrderReport r = consistency_order(consistency_study_by_id(id));
          py::dict out;
          out["steps"] = r.steps;
          out["residuals"] = r.residuals;
          out["slope"] = r.slope;
          out["exact"] = r.exact;
          return out;
        },
        py::arg("id"), "measured order for a catalogued study id");
}
