#ifndef CRSYM_ACCEPTANCE_HPP
#define CRSYM_ACCEPTANCE_HPP

#include <json.hpp>
#include <string>
#include <vector>

namespace crsym {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0.0;
  std::vector<std::string> notes;  // per-check details, failures first
};

// Runs the full verification suite; deterministic, exact arithmetic.
std::vector<CriterionResult> run_acceptance();

nlohmann::json acceptance_to_json(const std::vector<CriterionResult>& results);

}  // namespace crsym

#endif
