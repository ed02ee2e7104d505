#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cohere {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"closed-vs-variational", "monotonicity",
                                              "additivity", "visibility-bound", "prbox-gap"};
  return names;
}

struct SuiteOptions {
  std::string suite = "all";
  std::vector<int> dims{2, 3, 4};
  std::optional<int> trials;   // per dimension; suite default when unset
  std::uint64_t seed = 42;
  std::optional<double> tol;   // replaces each suite's primary tolerance
  int grid = 101;              // prbox-gap transition grid

  /// Throws InvalidConfig for unknown suites, dims outside {2,3,4},
  /// trials < 1 or grid < 2.
  void validate() const;
};

/// One asserted comparison. It fails when violation > tolerance.
struct CheckRecord {
  std::string check;
  int dim = 0;
  int trial = 0;
  double value = 0.0;
  double reference = 0.0;
  double violation = 0.0;
  double tolerance = 0.0;

  bool failed() const { return violation > tolerance; }
};

/// Summary of a quantity that is recorded but not asserted.
struct Observation {
  std::string check;
  int dim = 0;
  int count = 0;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct SuiteReport {
  std::string suite;
  int trials = 0;
  int failures = 0;
  double worst_violation = 0.0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;
  std::vector<Observation> observations;

  nlohmann::ordered_json to_json() const;
};

SuiteReport run_suite(const SuiteOptions& opts);

}  // namespace cohere
