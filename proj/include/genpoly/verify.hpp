#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace genpoly {

/// One named verification step. Library errors thrown inside a check are
/// caught and reported as failures with the error text as detail.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Enumeration budget for the oracle checks; 0 keeps the census defaults.
  std::uint64_t budget = 0;
  unsigned workers = 1;
  /// Largest d used by the theorem checks.
  int max_d = 5;
};

enum class Suite { Identities, PaperTables, Oracle, Theorems, All };

std::optional<Suite> parse_suite(const std::string& name);
std::string to_string(Suite suite);

// Groups of checks; the suites below are unions of these.
std::vector<CheckResult> gaussian_identity_checks();
std::vector<CheckResult> series_property_checks();
std::vector<CheckResult> published_s_table_checks();
std::vector<CheckResult> published_two_variable_checks();
std::vector<CheckResult> published_r_checks();
std::vector<CheckResult> oracle_subspace_checks(const VerifyOptions& options);
std::vector<CheckResult> oracle_tuple_checks(const VerifyOptions& options);
std::vector<CheckResult> oracle_property_checks();
std::vector<CheckResult> theorem_checks(const VerifyOptions& options);

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace genpoly
