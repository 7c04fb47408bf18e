#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "m1n/picard.hpp"

namespace m1n {

struct CheckResult {
  std::string module;
  std::string check;
  bool pass;
  nlohmann::json expected;
  nlohmann::json actual;
  std::string citation;
};

// Compares two scalars; constants serialize as "p/q", others as arrays.
CheckResult expect_equal(std::string module, std::string check, const Scalar &expected,
                         const Scalar &actual, std::string citation);
// Like expect_equal but always serializes as a coefficient array.
CheckResult expect_equal_poly(std::string module, std::string check, const Scalar &expected,
                              const Scalar &actual, std::string citation);
CheckResult expect_true(std::string module, std::string check, bool ok, std::string citation,
                        nlohmann::json expected = true, nlohmann::json actual = nullptr);

enum class ReportFormat { Text, Json };

// Rows sorted by (module, check); output is byte-deterministic.
std::string emit_report(std::vector<CheckResult> results, ReportFormat format);
bool all_pass(const std::vector<CheckResult> &results);

struct VerifyOptions {
  int max_d = 12;
  int direct_max_d = 6;
  // Replacements for the built-in golden expansions.
  std::optional<DivisorClassM1n> golden_trigonal;
  std::optional<DivisorClassM1n> golden_gp;
};

std::vector<CheckResult> verify_trigonal(const VerifyOptions &opts);
std::vector<CheckResult> verify_gonal(const VerifyOptions &opts);
std::vector<CheckResult> verify_gp(const VerifyOptions &opts);
std::vector<CheckResult> verify_chow(const VerifyOptions &opts);
// "all", "trigonal", "gonal", "gp" or "chow".
std::vector<CheckResult> verify_section(const std::string &section, const VerifyOptions &opts);

// One row per differing coordinate (at most `limit`), plus a summary row.
std::vector<CheckResult> compare_classes(const std::string &module, const std::string &check,
                                         const DivisorClassM1n &expected,
                                         const DivisorClassM1n &actual,
                                         const std::string &citation, std::size_t limit = 10);

} // namespace m1n
