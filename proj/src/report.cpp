#include "symm/report.hpp"

#include <cstdio>

namespace symm {

nlohmann::json to_json(const InvarianceReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j{{"generator", e.generator},
                     {"subject", e.subject},
                     {"n_samples", e.n_samples},
                     {"max_violation", e.max_violation},
                     {"pass", e.pass}};
    if (e.n_escaped > 0) j["n_escaped"] = e.n_escaped;
    entries.push_back(std::move(j));
  }
  return nlohmann::json{
      {"kind", report.kind}, {"tol", report.tol}, {"pass", report.pass}, {"checks", entries}};
}

nlohmann::json to_json(const RankReport& report) {
  return nlohmann::json{{"dim_flat", report.dim_flat},
                        {"n_constraints", report.n_constraints},
                        {"dim_manifold", report.dim_manifold},
                        {"rank", report.rank},
                        {"mu", report.mu},
                        {"stable", report.stable},
                        {"sample_ranks", report.sample_ranks}};
}

nlohmann::json to_json(const OrderReport& report) {
  return nlohmann::json{{"steps", report.steps},
                        {"residuals", report.residuals},
                        {"slope", report.slope},
                        {"exact", report.exact}};
}

std::string config_hash(const nlohmann::json& config) {
  const std::string canonical = config.dump();
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace symm
