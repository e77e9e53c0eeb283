#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncdr/algebra.hpp"

namespace ncdr {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Worst residual observed (0 for exact checks that hold).
  double residual = 0;
  /// Witness or summary text.
  std::string detail;
  double elapsed_ms = 0;
};

/// Check results ordered by name.
struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// Passes when every check not listed in `allowed` passes.
  bool all_pass_except(const std::vector<std::string>& allowed) const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Quaternion algebra under test; builtin H unless replaced (e.g. from a JSON spec file).
  AlgebraPtr h;
};

/// Runs every acceptance check. Domain errors inside a check mark it failed.
Report run_verify_all(const VerifyOptions& opts);
/// Names of the checks in run order.
std::vector<std::string> check_names();

struct TableRow {
  std::string identity;
  double max_rel_residual = 0;
  std::size_t points = 0;
};

/// Numeric Gateaux derivatives of the standard maps against their closed forms at random rational points.
std::vector<TableRow> derivative_table(std::uint64_t seed, std::size_t points = 100, const AlgebraPtr& h = nullptr);

}  // namespace ncdr
