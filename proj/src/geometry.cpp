#include "symm/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace symm {

bool Offset::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](int e) { return e == 0; });
}

bool SpacePoint::finite() const {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  for (double v : u)
    if (!std::isfinite(v)) return false;
  return true;
}

StencilTemplate::StencilTemplate(std::vector<Offset> offsets, std::vector<std::string> labels)
    : offsets_(std::move(offsets)), labels_(std::move(labels)) {
  if (offsets_.size() != labels_.size())
    throw ConfigError("template offsets and labels differ in length");
  if (offsets_.empty()) throw ConfigError("template is empty");
  std::set<Offset> seen(offsets_.begin(), offsets_.end());
  if (seen.size() != offsets_.size()) throw ConfigError("template offsets are not distinct");
  const std::size_t len = offsets_.front().entries.size();
  bool has_zero = false;
  for (const auto& o : offsets_) {
    if (o.entries.size() != len) throw ConfigError("template offsets have mixed lengths");
    has_zero = has_zero || o.is_zero();
  }
  if (!has_zero) throw ConfigError("template must contain the zero offset");
}

std::size_t StencilTemplate::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw MissingLabel("no stencil label '" + label + "'");
}

bool StencilTemplate::has_label(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

StencilConfig::StencilConfig(StencilTemplate tmpl, std::vector<SpacePoint> points)
    : tmpl_(std::move(tmpl)), points_(std::move(points)) {
  if (points_.size() != tmpl_.size())
    throw ConfigError("config needs exactly one point per template offset");
  p_ = static_cast<int>(points_.front().x.size());
  q_ = static_cast<int>(points_.front().u.size());
  for (const auto& pt : points_) {
    if (static_cast<int>(pt.x.size()) != p_ || static_cast<int>(pt.u.size()) != q_)
      throw ConfigError("config points have mixed dimensions");
  }
}

Vec StencilConfig::flatten() const {
  Vec out;
  out.reserve(dim());
  for (const auto& pt : points_) {
    out.insert(out.end(), pt.x.begin(), pt.x.end());
    out.insert(out.end(), pt.u.begin(), pt.u.end());
  }
  return out;
}

StencilConfig StencilConfig::unflatten(const StencilTemplate& tmpl, int p, int q,
                                       const Vec& coords) {
  if (coords.size() != tmpl.size() * static_cast<std::size_t>(p + q))
    throw ConfigError("flattened coordinate vector has wrong length");
  std::vector<SpacePoint> pts(tmpl.size());
  std::size_t k = 0;
  for (auto& pt : pts) {
    pt.x.assign(coords.begin() + k, coords.begin() + k + p);
    k += p;
    pt.u.assign(coords.begin() + k, coords.begin() + k + q);
    k += q;
  }
  return StencilConfig(tmpl, std::move(pts));
}

std::map<std::string, double> steps(const StencilConfig& config) {
  std::map<std::string, double> out;
  const auto& base = config.point("0");
  struct Entry {
    const char* label;
    const char* suffix;
    int sign;  // +1: x(label)-x(0), -1: x(0)-x(label)
  };
  static const Entry entries[] = {
      {"+", "plus", +1}, {"-", "minus", -1}, {"hat", "hat", +1}, {"check", "check", -1}};
  for (const auto& e : entries) {
    if (!config.stencil_template().has_label(e.label)) continue;
    const auto& pt = config.point(e.label);
    for (int i = 0; i < config.p(); ++i) {
      double d = e.sign > 0 ? pt.x[i] - base.x[i] : base.x[i] - pt.x[i];
      out["dx" + std::to_string(i + 1) + "_" + e.suffix] = d;
    }
  }
  return out;
}

double step(const StencilConfig& config, const std::string& name) {
  auto all = steps(config);
  auto it = all.find(name);
  if (it == all.end()) throw MissingLabel("no step named '" + name + "'");
  return it->second;
}

}  // namespace symm
