#pragma once

#include <functional>
#include <string>
#include <vector>

namespace liftforge {

struct Criterion {
  int id;
  std::string name;
  std::function<std::string()> run;  // returns a summary; throws on failure
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// The acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the given criteria (name-substring filter), catching failures.
std::vector<CriterionResult> run_criteria(const std::vector<Criterion>& criteria,
                                          const std::string& filter = "");

inline std::vector<CriterionResult> run_acceptance(const std::string& filter = "") {
  return run_criteria(acceptance_criteria(), filter);
}

}  // namespace liftforge
