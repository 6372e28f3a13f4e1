#include "symm/invariance.hpp"

#include <cmath>

namespace symm {

double directional_derivative(const ProlongedField& pv, const ConfigFn& f,
                              const StencilConfig& config) {
  const Vec coeff = pv.coefficients(config);
  Vec flat = config.flatten();
  const auto& tmpl = config.stencil_template();
  const int p = config.p(), q = config.q();

  double sum = 0.0;
  for (std::size_t j = 0; j < flat.size(); ++j) {
    if (coeff[j] == 0.0) continue;
    const double h = std::max(1e-7, 1e-7 * std::abs(flat[j]));
    const double saved = flat[j];
    flat[j] = saved + h;
    const double fp = f(StencilConfig::unflatten(tmpl, p, q, flat));
    flat[j] = saved - h;
    const double fm = f(StencilConfig::unflatten(tmpl, p, q, flat));
    flat[j] = saved;
    sum += coeff[j] * (fp - fm) / (2.0 * h);
  }
  return sum;
}

namespace {

InvarianceReport run_derivative_check(const std::string& kind, const ConfigFn& f,
                                      const std::string& subject,
                                      const SymmetryAlgebra& algebra,
                                      const ConfigSampler& sampler, int n_samples, Rng& rng,
                                      double tol, bool validate_manifold) {
  InvarianceReport report;
  report.kind = kind;
  report.tol = tol;

  std::vector<StencilConfig> samples;
  samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    StencilConfig c = sampler.draw(rng);
    if (validate_manifold && std::abs(f(c)) >= 1e-12)
      throw SamplerViolatesManifold(subject + ": |E| = " + std::to_string(std::abs(f(c))) +
                                    " at sample " + std::to_string(i));
    samples.push_back(std::move(c));
  }

  for (const auto& field : algebra.fields) {
    ProlongedField pv = prolong(field, sampler.tmpl);
    CheckEntry e;
    e.generator = field.name;
    e.subject = subject;
    e.n_samples = n_samples;
    for (const auto& c : samples)
      e.max_violation = std::max(e.max_violation, std::abs(directional_derivative(pv, f, c)));
    e.pass = e.max_violation < tol;
    report.add(std::move(e));
  }
  return report;
}

}  // namespace

InvarianceReport check_strong_invariance(const ConfigFn& f, const std::string& subject,
                                         const SymmetryAlgebra& algebra,
                                         const ConfigSampler& sampler, int n_samples, Rng& rng,
                                         double tol) {
  return run_derivative_check("strong", f, subject, algebra, sampler, n_samples, rng, tol,
                              false);
}

InvarianceReport check_weak_invariance(const ConfigFn& E, const std::string& subject,
                                       const SymmetryAlgebra& algebra,
                                       const ConfigSampler& sampler, int n_samples, Rng& rng,
                                       double tol) {
  return run_derivative_check("weak", E, subject, algebra, sampler, n_samples, rng, tol, true);
}

InvarianceReport check_finite_invariance(const ConfigFn& f, const std::string& subject,
                                         const SymmetryAlgebra& algebra,
                                         const ConfigSampler& sampler,
                                         const std::vector<double>& eps_sweep, int n_samples,
                                         Rng& rng, double tol) {
  InvarianceReport report;
  report.kind = "finite";
  report.tol = tol;

  std::vector<StencilConfig> samples;
  samples.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) samples.push_back(sampler.draw(rng));

  for (const auto& field : algebra.fields) {
    CheckEntry e;
    e.generator = field.name;
    e.subject = subject;
    e.n_samples = n_samples;
    for (const auto& c : samples) {
      const double before = f(c);
      for (double eps : eps_sweep) {
        try {
          const double after = f(prolonged_flow(field, c, eps));
          e.max_violation = std::max(e.max_violation, std::abs(after - before));
        } catch (const Error&) {
          ++e.n_escaped;
        }
      }
    }
    e.pass = e.max_violation < tol;
    report.add(std::move(e));
  }
  return report;
}

}  // namespace symm
