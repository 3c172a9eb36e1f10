#include "quasibraid/report.hpp"

#include <algorithm>

#include "quasibraid/error.hpp"

namespace quasibraid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::singular_configuration: return "singular_configuration";
    case ErrorCode::not_idempotent: return "not_idempotent";
    case ErrorCode::flip_undefined: return "flip_undefined";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

bool RelationReport::all_pass() const {
  return std::all_of(relations.begin(), relations.end(), [](const auto& r) { return r.pass; });
}

const RelationCheck& RelationReport::at(const std::string& name) const {
  auto it = std::find_if(relations.begin(), relations.end(),
                         [&](const auto& r) { return r.name == name; });
  if (it == relations.end()) throw Error(ErrorCode::invalid_argument, "no relation named " + name);
  return *it;
}

nlohmann::json to_json(const RelationReport& report) {
  nlohmann::json rel = nlohmann::json::array();
  for (const auto& r : report.relations) {
    rel.push_back({{"name", r.name},
                   {"max_deviation", r.max_deviation},
                   {"tolerance", r.tolerance},
                   {"instances", r.instances},
                   {"pass", r.pass}});
  }
  return {{"relations", rel}, {"pass", report.all_pass()}};
}

}  // namespace quasibraid
