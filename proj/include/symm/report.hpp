#pragma once

#include <string>

#include "symm/consistency.hpp"
#include "symm/invariance.hpp"
#include "symm/rank.hpp"

#include "json.hpp"

namespace symm {

nlohmann::json to_json(const InvarianceReport& report);
nlohmann::json to_json(const RankReport& report);
nlohmann::json to_json(const OrderReport& report);

// FNV-1a 64-bit over the canonical (sorted-key) serialization; embedded in
// every emitted report so runs can be tied to their configuration.
std::string config_hash(const nlohmann::json& config);

// %.17g formatting used by all CSV emitters.
std::string format_double(double v);

}  // namespace symm
