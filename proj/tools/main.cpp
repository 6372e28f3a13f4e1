// Command-line front end: invariance verification suites, invariant counts,
// marches, transformation checks and convergence studies.  All outputs are
// deterministic functions of (config, seed) and land in a run directory.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "symm/catalog.hpp"
#include "symm/consistency.hpp"
#include "symm/rank.hpp"
#include "symm/report.hpp"
#include "symm/solvers.hpp"
#include "symm/transform.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace symm;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Run {
  json config;
  std::string command;
  std::uint64_t seed = 1;
  fs::path out_dir;
  std::string hash;
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");
  return j;
}

// Structural validation against the published schema (docs/config.schema.json):
// unknown keys are configuration errors, not silent no-ops.
void validate_keys(const json& cfg) {
  static const std::vector<std::string> top = {
      "command", "scheme", "family", "pair", "schemes",
      "params",  "samples", "tolerances", "seed", "out"};
  static const std::vector<std::string> params = {
      "eps", "delta", "tau", "h", "c", "K", "x0", "t0", "v0", "y0", "z0",
      "r0", "r1", "theta0", "steps", "nodes", "n_r", "n_theta", "max_sweeps",
      "tol", "A", "B", "F", "g", "h_fn", "family", "boundary"};
  static const std::vector<std::string> samples = {"n_strong", "n_weak", "n_finite",
                                                   "n_rank", "n_stencils"};
  static const std::vector<std::string> tolerances = {"strong", "weak", "finite"};
  auto check = [](const json& obj, const std::vector<std::string>& allowed,
                  const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
      (void)value;
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw ConfigError("unknown key '" + key + "' in " + where);
    }
  };
  check(cfg, top, "config");
  if (cfg.contains("params")) check(cfg.at("params"), params, "params");
  if (cfg.contains("samples")) check(cfg.at("samples"), samples, "samples");
  if (cfg.contains("tolerances")) check(cfg.at("tolerances"), tolerances, "tolerances");
}

double param(const json& cfg, const std::string& key, double fallback) {
  if (!cfg.contains("params")) return fallback;
  const auto& p = cfg.at("params");
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_number()) throw ConfigError("params." + key + " must be a number");
  return p.at(key).get<double>();
}

std::string param_str(const json& cfg, const std::string& key, const std::string& fallback) {
  if (!cfg.contains("params")) return fallback;
  const auto& p = cfg.at("params");
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_string()) throw ConfigError("params." + key + " must be a string");
  return p.at(key).get<std::string>();
}

int sample_count(const json& cfg, const std::string& key, int fallback) {
  if (!cfg.contains("samples") || !cfg.at("samples").contains(key)) return fallback;
  return cfg.at("samples").at(key).get<int>();
}

double tolerance(const json& cfg, const std::string& key, double fallback) {
  if (!cfg.contains("tolerances") || !cfg.at("tolerances").contains(key)) return fallback;
  return cfg.at("tolerances").at(key).get<double>();
}

std::string required_str(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg.at(key).is_string())
    throw ConfigError("config needs a string field '" + key + "'");
  return cfg.at(key).get<std::string>();
}

SchemeParams scheme_params(const json& cfg) {
  SchemeParams p;
  p.eps = param(cfg, "eps", 0.1);
  p.delta = param(cfg, "delta", 0.1);
  p.tau = param(cfg, "tau", 0.01);
  p.h = param(cfg, "h", 0.1);
  p.A = named_scalar_fn(param_str(cfg, "A", "zero"));
  p.B = named_scalar_fn(param_str(cfg, "B", "id"));
  p.F = named_scalar_fn(param_str(cfg, "F", "zero"));
  p.F_source = named_source_fn(param_str(cfg, "F", "zero"));
  return p;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  out << text;
}

void emit_report(const Run& run, json body, const std::string& name = "report.json") {
  body["command"] = run.command;
  body["seed"] = run.seed;
  body["config_hash"] = run.hash;
  write_text(run.out_dir / name, body.dump(2) + "\n");
}

void emit_grid(const Run& run, const SolutionGrid& grid,
               const std::vector<std::string>& x_names, const std::vector<std::string>& u_names,
               const std::string& name) {
  std::ostringstream os;
  write_grid_csv(os, grid, x_names, u_names);
  write_text(run.out_dir / name, os.str());
}

// --------------------------------------------------------------------------
// verify
// --------------------------------------------------------------------------

int cmd_verify(const Run& run) {
  Rng rng(run.seed);
  json reports = json::array();
  bool pass = true;
  const double strong_tol = tolerance(run.config, "strong", 1e-6);
  const double weak_tol = tolerance(run.config, "weak", 1e-6);
  const double finite_tol = tolerance(run.config, "finite", 1e-7);
  const int n_strong = sample_count(run.config, "n_strong", 200);
  const int n_weak = sample_count(run.config, "n_weak", 200);
  const int n_finite = sample_count(run.config, "n_finite", 25);

  bool checked_anything = false;
  if (run.config.contains("family")) {
    checked_anything = true;
    InvariantFamily fam = family_by_id(required_str(run.config, "family"));
    for (const auto& [name, fn] : fam.members) {
      auto r = check_strong_invariance(fn, name, fam.algebra, fam.sampler, n_strong, rng,
                                       strong_tol);
      pass = pass && r.pass;
      reports.push_back(to_json(r));
    }
    for (const auto& [name, fn] : fam.members) {
      auto r = check_finite_invariance(fn, name, fam.algebra, fam.sampler,
                                       default_eps_sweep(), n_finite, rng, 1e-8);
      pass = pass && r.pass;
      reports.push_back(to_json(r));
    }
  }
  if (run.config.contains("scheme")) {
    checked_anything = true;
    Scheme scheme = scheme_by_id(required_str(run.config, "scheme"), scheme_params(run.config));
    ConfigSampler sampler = scheme_manifold_sampler(scheme);
    for (std::size_t k = 0; k < scheme.residuals.size(); ++k) {
      auto r = check_weak_invariance(scheme.residuals[k], scheme.residual_names[k],
                                     scheme.algebra, sampler, n_weak, rng, weak_tol);
      pass = pass && r.pass;
      reports.push_back(to_json(r));
    }
    // Finite-flow preservation of the scheme's zero set.
    InvarianceReport zero_set;
    zero_set.kind = "zero-set";
    zero_set.tol = finite_tol;
    for (const auto& field : scheme.algebra.fields) {
      CheckEntry e;
      e.generator = field.name;
      e.subject = "residuals";
      e.n_samples = n_finite;
      for (int i = 0; i < n_finite; ++i) {
        StencilConfig c = sampler.draw(rng);
        for (double eps : default_eps_sweep()) {
          try {
            StencilConfig moved = prolonged_flow(field, c, eps);
            e.max_violation = std::max(e.max_violation, max_abs_residual(scheme, moved));
          } catch (const Error&) {
            ++e.n_escaped;
          }
        }
      }
      e.pass = e.max_violation < finite_tol;
      zero_set.add(std::move(e));
    }
    pass = pass && zero_set.pass;
    reports.push_back(to_json(zero_set));
  }
  if (!checked_anything)
    throw ConfigError("verify needs a 'scheme' or 'family' field in the config");

  emit_report(run, json{{"pass", pass}, {"reports", reports}});
  return pass ? kExitPass : kExitFail;
}

// --------------------------------------------------------------------------
// rank
// --------------------------------------------------------------------------

int cmd_rank(const Run& run) {
  Rng rng(run.seed);
  const std::string id = required_str(run.config, "family");
  InvariantFamily fam = family_by_id(id);
  const int n = sample_count(run.config, "n_rank", 100);
  RankReport report = invariant_count(fam.algebra, rank_sampler(id), n, rng);
  json body = to_json(report);
  body["family"] = id;
  body["declared_mu"] = fam.declared_mu;
  const bool pass = report.stable && (fam.declared_mu < 0 || report.mu == fam.declared_mu);
  body["pass"] = pass;
  emit_report(run, body);
  return pass ? kExitPass : kExitFail;
}

// --------------------------------------------------------------------------
// march
// --------------------------------------------------------------------------

int march_ode_command(const Run& run, const std::string& id) {
  SchemeParams p = scheme_params(run.config);
  const double eps = p.eps;
  const double c = param(run.config, "c", 1.0);
  const long steps = static_cast<long>(param(run.config, "steps", 50));
  Scheme scheme = scheme_by_id(id, p);
  json manifest{{"scheme", id}, {"eps", eps}, {"steps", steps}};

  if (id == "linear-ode") {
    const double x0 = param(run.config, "x0", 0.0);
    auto A = p.A, B = p.B;
    const double u0 = (B(x0) + c) * std::exp(A(x0));
    SolutionGrid traj = march_ode(scheme, x0, u0, steps);
    emit_grid(run, traj, {"x"}, {"u"}, "trajectory.csv");
    manifest["outputs"] = {"trajectory.csv"};
  } else {
    const double v0 = param(run.config, "v0", 0.0);
    auto A = p.A, B = p.B;
    const double y0 = (B(v0) + c) * std::exp(A(v0));
    SolutionGrid traj = march_ode(scheme, y0, v0, steps);
    emit_grid(run, traj, {"y"}, {"v"}, "points.csv");
    // Dense closed-form curve for overlay plotting.
    std::ostringstream os;
    os << "v,y\n";
    const double v_end = v0 + eps * steps;
    for (int i = 0; i <= 400; ++i) {
      const double v = v0 + (v_end - v0) * i / 400.0;
      os << format_double(v) << ',' << format_double((B(v) + c) * std::exp(A(v))) << '\n';
    }
    write_text(run.out_dir / "curve.csv", os.str());
    manifest["outputs"] = {"points.csv", "curve.csv"};
    manifest["curve"] = "y = (B(v) + c) exp(A(v))";
  }
  manifest["c"] = c;
  emit_report(run, manifest, "manifest.json");
  return kExitPass;
}

int march_heat_command(const Run& run, const std::string& id) {
  const double h = param(run.config, "h", 0.1);
  const double tau = param(run.config, "tau", 0.002);
  const double x0 = param(run.config, "x0", 0.0);
  const double t0 = param(run.config, "t0", 1.0);
  const double c = param(run.config, "c", 1.0);
  const double K = param(run.config, "K", 1.0);
  const long nodes = static_cast<long>(param(run.config, "nodes", 30));
  const long steps = static_cast<long>(param(run.config, "steps", 50));
  const std::string family = param_str(run.config, "family", "exp");
  const std::string boundary = param_str(run.config, "boundary", "trace");

  ExactSolution sol = family == "fundamental"
                          ? heat_fundamental_solution(h, x0, t0, tau)
                          : heat_exponential_solution(h, x0, t0, tau, c, K);
  const bool hodograph_roles = id == "nl-heat";
  if (hodograph_roles) sol = pushforward_solution(hodograph_transformation(2), sol);

  MarchState state;
  for (long n = 0; n < nodes; ++n) state.layer.push_back(sol.at(0, n));
  state.tau = tau;
  if (boundary == "trace") {
    state.boundary.kind = BoundaryPolicy::Kind::ExactTrace;
    state.boundary.trace = [sol](long m, long n) { return sol.at(m, n); };
  } else {
    state.boundary.kind = BoundaryPolicy::Kind::CopyStep;
  }
  SolutionGrid grid = march_heat(state, steps, hodograph_roles);
  if (hodograph_roles)
    emit_grid(run, grid, {"y", "t"}, {"v"}, "trajectory.csv");
  else
    emit_grid(run, grid, {"x", "t"}, {"u"}, "trajectory.csv");

  // Deviation from the closed-form family, for the manifest.
  double worst = 0.0;
  for (long m = 0; m <= steps; ++m)
    for (long n = 0; n < nodes; ++n) {
      SpacePoint e = sol.at(m, n);
      worst = std::max({worst, std::abs(grid.at(m, n).x[0] - e.x[0]),
                        std::abs(grid.at(m, n).u[0] - e.u[0])});
    }
  emit_report(run,
              json{{"scheme", id},
                   {"family", family},
                   {"boundary", boundary},
                   {"h", h},
                   {"tau", tau},
                   {"steps", steps},
                   {"nodes", nodes},
                   {"max_deviation_from_family", worst},
                   {"outputs", {"trajectory.csv"}}},
              "manifest.json");
  return kExitPass;
}

int march_wave_command(const Run& run, const std::string& id) {
  SchemeParams p = scheme_params(run.config);
  const double eps = p.eps;
  const double delta = param(run.config, "delta", -0.1);  // signed z-step
  const double y0 = param(run.config, "y0", 0.0);
  const double z0 = param(run.config, "z0", 0.0);
  const long nodes = static_cast<long>(param(run.config, "nodes", 40));
  const long steps = static_cast<long>(param(run.config, "steps", 40));
  auto g = named_scalar_fn(param_str(run.config, "g", "sin"));
  auto h = named_scalar_fn(param_str(run.config, "h_fn", "exp"));

  Scheme scheme = wave_scheme_yz(p.F, eps, delta);
  std::vector<double> row0, col0;
  for (long n = 0; n < nodes; ++n) row0.push_back(g(y0 + eps * n) + h(z0));
  for (long m = 0; m < steps; ++m) col0.push_back(g(y0) + h(z0 + delta * m));
  SolutionGrid yz = march_wave(scheme, row0, col0, eps, delta, y0, z0);
  json manifest{{"scheme", id}, {"eps", eps}, {"delta", delta},
                {"nodes", nodes}, {"steps", steps}};
  if (id == "wave-xt") {
    SolutionGrid xt = wave_grid_to_xt(yz);
    emit_grid(run, xt, {"x", "t"}, {"u"}, "trajectory.csv");
    manifest["lattice"] = "x = (eps n + y0 + delta m + z0)/2, rotated 45 degrees";
  } else {
    emit_grid(run, yz, {"y", "z"}, {"u"}, "trajectory.csv");
  }
  manifest["outputs"] = {"trajectory.csv"};
  emit_report(run, manifest, "manifest.json");
  return kExitPass;
}

int march_polar_command(const Run& run) {
  const int n_r = static_cast<int>(param(run.config, "n_r", 64));
  const int n_theta = static_cast<int>(param(run.config, "n_theta", 64));
  const double r0 = param(run.config, "r0", 1.0);
  const double r1 = param(run.config, "r1", 2.0);
  const double eps = (r1 - r0) / n_r;
  const double delta = 2.0 * M_PI / n_theta;
  const int max_sweeps = static_cast<int>(param(run.config, "max_sweeps", 5000));
  const double tol = param(run.config, "tol", 1e-10);
  const std::string boundary = param_str(run.config, "boundary", "log-trace");

  Scheme scheme = polar_laplace_scheme(named_source_fn(param_str(run.config, "F", "zero")),
                                       eps, delta);
  AnnulusSpec annulus{r0, n_r, n_theta, param(run.config, "theta0", 0.0), true};
  std::function<double(double)> inner, outer;
  if (boundary == "log-trace") {
    inner = [r0](double) { return std::log(r0); };
    outer = [r1](double) { return std::log(r1); };
  } else if (boundary == "cos") {
    inner = [](double) { return 0.0; };
    outer = [](double th) { return std::cos(th); };
  } else {
    throw ConfigError("unknown polar boundary '" + boundary + "'");
  }
  EllipticResult result = solve_elliptic(scheme, annulus, inner, outer, max_sweeps, tol);
  emit_grid(run, result.grid, {"r", "theta"}, {"u"}, "grid.csv");

  // The same lattice in the original cartesian variables.
  SolutionGrid xy(2, 1);
  auto P = polar_transformation();
  for (std::size_t m = 0; m < result.grid.rows(); ++m) {
    std::vector<SpacePoint> row;
    for (std::size_t n = 0; n < result.grid.cols(m); ++n)
      row.push_back(apply(P, result.grid.at(m, n)));
    xy.append_row(std::move(row));
  }
  emit_grid(run, xy, {"x", "y"}, {"u"}, "lattice_xy.csv");

  emit_report(run,
              json{{"scheme", "polar"},
                   {"n_r", n_r},
                   {"n_theta", n_theta},
                   {"eps", eps},
                   {"delta", delta},
                   {"boundary", boundary},
                   {"sweeps", result.sweeps},
                   {"final_update", result.final_update},
                   {"scaled_residual", result.scaled_residual},
                   {"converged", result.converged},
                   {"outputs", {"grid.csv", "lattice_xy.csv"}}},
              "manifest.json");
  return kExitPass;
}

int cmd_march(const Run& run) {
  const std::string id = required_str(run.config, "scheme");
  if (id == "linear-ode" || id == "nl-ode") return march_ode_command(run, id);
  if (id == "heat" || id == "nl-heat") return march_heat_command(run, id);
  if (id == "wave-yz" || id == "wave-xt") return march_wave_command(run, id);
  if (id == "polar") return march_polar_command(run);
  throw ConfigError("march does not support scheme '" + id + "'");
}

// --------------------------------------------------------------------------
// transform-check
// --------------------------------------------------------------------------

struct PairCheck {
  double scheme_equality = 0.0;    // hand-coded image vs pushforward
  double invariant_equality = 0.0; // family members vs pushforward (if any)
  double solution_residual = 0.0;  // pushed exact solutions on the image scheme
  double conjugation_flow = 0.0;   // flow of conjugated field vs mapped flow
};

PairCheck check_heat_pair(Rng& rng, int n_samples) {
  PairCheck out;
  auto H = hodograph_transformation(2);
  Scheme pushed = pushforward_scheme(H, heat_scheme(0.01));
  Scheme image = nonlinear_heat_scheme(0.01);
  auto heat_fam = heat_invariants();
  auto nl_fam = nonlinear_heat_invariants();
  for (int i = 0; i < n_samples; ++i) {
    StencilConfig c = nl_fam.sampler.draw(rng);
    for (std::size_t k = 0; k < image.residuals.size(); ++k)
      out.scheme_equality = std::max(
          out.scheme_equality, std::abs(pushed.residuals[k](c) - image.residuals[k](c)));
    for (std::size_t k = 0; k < nl_fam.members.size(); ++k) {
      ConfigFn fn = pushforward_invariant(H, heat_fam.members[k].second);
      out.invariant_equality = std::max(
          out.invariant_equality, std::abs(fn(c) - nl_fam.members[k].second(c)));
    }
  }
  for (ExactSolution sol : {heat_exponential_solution(0.1, 0.0, 1.0, 0.01, 1.0, 1.0),
                            heat_fundamental_solution(0.1, 0.0, 1.0, 0.01)}) {
    ExactSolution mapped = pushforward_solution(H, sol);
    out.solution_residual = std::max(
        out.solution_residual, max_residual_on_grid(image, sample_solution(mapped, 12, 12)));
  }
  for (const auto& v : heat_algebra().fields) {
    VectorField conj = conjugate_field(H, v);
    for (int i = 0; i < 10; ++i) {
      SpacePoint pt{{rng.uniform(-0.8, 0.8), rng.uniform(0.3, 0.8)}, {rng.uniform(0.6, 1.6)}};
      const double eps = rng.uniform(-0.15, 0.15);
      SpacePoint lhs = flow(conj, apply(H, pt), eps);
      SpacePoint rhs = apply(H, flow(v, pt, eps));
      for (int k = 0; k < 2; ++k)
        out.conjugation_flow = std::max(out.conjugation_flow, std::abs(lhs.x[k] - rhs.x[k]));
      out.conjugation_flow = std::max(out.conjugation_flow, std::abs(lhs.u[0] - rhs.u[0]));
    }
  }
  return out;
}

PairCheck check_ode_pair(Rng& rng, int n_samples, const ScalarFn& A, const ScalarFn& B) {
  PairCheck out;
  auto H = hodograph_transformation(1);
  Scheme pushed = pushforward_scheme(H, linear_ode_scheme(A, B, 0.1));
  Scheme image = nonlinear_ode_scheme(A, B, 0.1);
  for (int i = 0; i < n_samples; ++i) {
    StencilConfig c(ode_template(), {{{rng.uniform(0.5, 2.0)}, {rng.uniform(-1.0, 1.0)}},
                                     {{rng.uniform(0.5, 2.0)}, {rng.uniform(-1.0, 1.0)}}});
    for (std::size_t k = 0; k < image.residuals.size(); ++k)
      out.scheme_equality = std::max(
          out.scheme_equality, std::abs(pushed.residuals[k](c) - image.residuals[k](c)));
  }
  ExactSolution mapped =
      pushforward_solution(H, linear_ode_solution(A, B, 1.0, 0.1, 0.0));
  out.solution_residual = max_residual_on_grid(image, sample_solution(mapped, 40, 1));
  for (const auto& v : linear_ode_algebra(A, B).fields) {
    VectorField conj = conjugate_field(H, v);
    for (int i = 0; i < 10; ++i) {
      SpacePoint pt{{rng.uniform(-0.8, 0.8)}, {rng.uniform(0.5, 1.5)}};
      const double eps = rng.uniform(-0.2, 0.2);
      SpacePoint lhs = flow(conj, apply(H, pt), eps);
      SpacePoint rhs = apply(H, flow(v, pt, eps));
      out.conjugation_flow = std::max({out.conjugation_flow, std::abs(lhs.x[0] - rhs.x[0]),
                                       std::abs(lhs.u[0] - rhs.u[0])});
    }
  }
  return out;
}

PairCheck check_wave_pair(Rng& rng, int n_samples) {
  PairCheck out;
  auto psi = characteristic_transformation();
  auto F = named_scalar_fn("sin");
  Scheme yz = wave_scheme_yz(F, 0.2, 0.2);
  Scheme xt = wave_scheme_xt(F, 0.2, 0.2);
  ConfigSampler sampler = scheme_manifold_sampler(xt);
  auto yz_fam = wave_invariants();
  auto xt_fam = wave_invariants_xt();
  for (int i = 0; i < n_samples; ++i) {
    StencilConfig c = sampler.draw(rng);
    StencilConfig mapped = pushforward_stencil(psi, c);
    for (std::size_t k = 0; k < xt.residuals.size(); ++k)
      out.scheme_equality = std::max(
          out.scheme_equality, std::abs(xt.residuals[k](c) - yz.residuals[k](mapped)));
    for (std::size_t k = 0; k < xt_fam.members.size(); ++k)
      out.invariant_equality =
          std::max(out.invariant_equality, std::abs(xt_fam.members[k].second(c) -
                                                    yz_fam.members[k].second(mapped)));
  }
  for (const auto& v : wave_algebra_xt().fields) {
    VectorField conj = conjugate_field(psi, v);
    for (int i = 0; i < 10; ++i) {
      SpacePoint pt{{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}, {rng.uniform(0.5, 2.0)}};
      const double eps = rng.uniform(-0.2, 0.2);
      SpacePoint lhs = flow(conj, apply(psi, pt), eps);
      SpacePoint rhs = apply(psi, flow(v, pt, eps));
      for (int k = 0; k < 2; ++k)
        out.conjugation_flow = std::max(out.conjugation_flow, std::abs(lhs.x[k] - rhs.x[k]));
    }
  }
  return out;
}

int cmd_transform_check(const Run& run) {
  Rng rng(run.seed);
  const std::string pair = required_str(run.config, "pair");
  const int n = sample_count(run.config, "n_stencils", 100);
  PairCheck check;
  std::string transformation;
  if (pair == "heat") {
    check = check_heat_pair(rng, n);
    transformation = "hodograph";
  } else if (pair == "ode") {
    check = check_ode_pair(rng, n, named_scalar_fn(param_str(run.config, "A", "square")),
                           named_scalar_fn(param_str(run.config, "B", "sin")));
    transformation = "hodograph";
  } else if (pair == "wave") {
    check = check_wave_pair(rng, n);
    transformation = "characteristic";
  } else {
    throw ConfigError("unknown pair '" + pair + "'");
  }
  const bool pass = check.scheme_equality < 1e-12 && check.invariant_equality < 1e-12 &&
                    check.solution_residual < 1e-10 && check.conjugation_flow < 1e-8;
  emit_report(run, json{{"pair", pair},
                        {"transformation", transformation},
                        {"n_stencils", n},
                        {"scheme_equality", check.scheme_equality},
                        {"invariant_equality", check.invariant_equality},
                        {"solution_residual", check.solution_residual},
                        {"conjugation_flow", check.conjugation_flow},
                        {"pass", pass}});
  return pass ? kExitPass : kExitFail;
}

// --------------------------------------------------------------------------
// convergence
// --------------------------------------------------------------------------

int cmd_convergence(const Run& run) {
  json body;
  bool pass = true;
  std::ostringstream table;
  table << "study,level,step,residual\n";

  auto add_study = [&](const std::string& id) {
    ConsistencyStudy study = consistency_study_by_id(id);
    OrderReport r = consistency_order(study);
    for (std::size_t i = 0; i < r.steps.size(); ++i)
      table << id << ',' << i << ',' << format_double(r.steps[i]) << ','
            << format_double(r.residuals[i]) << '\n';
    body["orders"][id] = to_json(r);
    return r;
  };

  if (run.config.contains("pair")) {
    const std::string pair = required_str(run.config, "pair");
    std::string original, transformed;
    if (pair == "heat") {
      original = "heat";
      transformed = "nl-heat";
    } else if (pair == "wave") {
      original = "wave-yz";
      transformed = "wave-xt";
    } else {
      throw ConfigError("unknown pair '" + pair + "'");
    }
    OrderReport a = add_study(original);
    OrderReport b = add_study(transformed);
    const double min_order = 0.8;
    pass = (a.exact || a.slope >= min_order) && (b.exact || b.slope >= min_order);
    body["min_order"] = min_order;
  } else if (run.config.contains("schemes")) {
    for (const auto& id : run.config.at("schemes")) add_study(id.get<std::string>());
  } else {
    add_study(required_str(run.config, "scheme"));
  }
  body["pass"] = pass;
  write_text(run.out_dir / "orders.csv", table.str());
  emit_report(run, body);
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry-preserving finite-difference schemes"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed_override;
  std::string out_override;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON run configuration")->required();
    sub->add_option("--seed", seed_override, "override the config seed");
    sub->add_option("--out", out_override, "override the output directory");
  };
  add_common(app.add_subcommand("verify", "invariance suites for a scheme or family"));
  add_common(app.add_subcommand("rank", "invariant count via the prolonged coefficient matrix"));
  add_common(app.add_subcommand("march", "run a scheme and emit its lattice and solution"));
  add_common(app.add_subcommand("transform-check", "pushforward and conjugation checks"));
  add_common(app.add_subcommand("convergence", "consistency-order measurement"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    Run run;
    run.command = app.get_subcommands().front()->get_name();
    run.config = load_json(config_path);
    validate_keys(run.config);
    if (run.config.contains("command") &&
        run.config.at("command").get<std::string>() != run.command)
      throw ConfigError("config 'command' does not match the subcommand");
    run.seed = seed_override ? *seed_override
                             : run.config.value("seed", static_cast<std::uint64_t>(1));
    json hashed = run.config;
    hashed["seed"] = run.seed;
    run.hash = config_hash(hashed);
    std::string out = !out_override.empty()
                          ? out_override
                          : run.config.value("out", std::string("runs/") + run.command);
    run.out_dir = out;
    fs::create_directories(run.out_dir);

    int code = kExitUsage;
    if (run.command == "verify") code = cmd_verify(run);
    else if (run.command == "rank") code = cmd_rank(run);
    else if (run.command == "march") code = cmd_march(run);
    else if (run.command == "transform-check") code = cmd_transform_check(run);
    else if (run.command == "convergence") code = cmd_convergence(run);
    if (code == kExitFail) std::cerr << "FAIL: see " << (run.out_dir / "report.json") << "\n";
    return code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
