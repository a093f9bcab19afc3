#pragma once

// Named verification checks over all modules, suites, and report emission.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace stein {

struct CheckParams {
  std::optional<int> p, n, d, i, j, max_degree;
  std::optional<std::string> group;
};

struct CheckReport {
  std::string check;
  nlohmann::json params;  // the resolved parameters, defaults filled in
  std::string status;     // pass, fail or skipped
  nlohmann::json witness;
  std::optional<double> elapsed_ms;
  nlohmann::json convention_notes;

  bool passed() const { return status == "pass"; }
  nlohmann::json to_json() const;
};

const std::vector<std::string>& check_names();

/// Throws std::invalid_argument for an unknown check or invalid parameters.
/// Failures inside a check become status "fail" with the error in the witness.
CheckReport run_check(const std::string& name, const CheckParams& params, bool timings = false);

enum class SuiteLevel { Quick, Full };

struct PlannedCheck {
  std::string check;
  CheckParams params;
};

std::vector<PlannedCheck> suite_plan(SuiteLevel level);
/// Runs the plan on `threads` workers; reports come back in plan order.
std::vector<CheckReport> run_suite(SuiteLevel level, int threads = 1, bool timings = false);
std::vector<CheckReport> run_plan(const std::vector<PlannedCheck>& plan, int threads = 1, bool timings = false);

std::string to_markdown(const std::vector<CheckReport>& reports);

}  // namespace stein
