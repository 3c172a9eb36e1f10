#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace quasibraid {

struct RelationCheck {
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  // Number of generator (pair) instances the relation was evaluated on.
  std::size_t instances = 0;
  bool pass = true;
};

struct RelationReport {
  std::vector<RelationCheck> relations;

  bool all_pass() const;
  const RelationCheck& at(const std::string& name) const;
};

nlohmann::json to_json(const RelationReport& report);

}  // namespace quasibraid
