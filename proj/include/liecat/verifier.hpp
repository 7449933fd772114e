#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liecat/scalar.hpp"

namespace liecat {

/// Unset optional fields fall back to the suite's own defaults.
struct SuiteConfig {
  std::uint64_t seed = 1;
  std::optional<std::size_t> cases;
  std::optional<std::size_t> max_degree;
  std::optional<std::size_t> n_gens;
  std::optional<Field> field;
};

struct Failure {
  std::size_t case_index = 0;
  /// The identity that failed, e.g. "c_u g = c_u".
  std::string anchor;
  nlohmann::json inputs;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string suite;
  /// The resolved configuration (defaults filled in).
  nlohmann::json config;
  std::string sampling;
  std::size_t cases = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<Failure> failures;
  nlohmann::json details = nlohmann::json::object();
  /// Set when the suite aborted with a domain error.
  std::optional<std::string> error;

  bool pass() const { return !error && failed == 0; }
};

/// Suite names in the fixed order used by run_all.
const std::vector<std::string>& suite_names();

/// UnknownSuite for an unrecognized name; ConfigInvalid for a config the
/// suite cannot honour.
Report run_suite(const std::string& name, const SuiteConfig& config);

/// Runs every suite, `jobs` at a time (0 picks the hardware concurrency).
/// A suite that throws yields an error report; the others still run.
std::vector<Report> run_all(const SuiteConfig& config, unsigned jobs = 0);

nlohmann::json to_json(const Report& report);

}  // namespace liecat
