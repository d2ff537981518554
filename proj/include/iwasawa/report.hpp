#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "iwasawa/clifford.hpp"
#include "iwasawa/completion.hpp"

namespace iwasawa {

enum class SuiteStatus { pass, fail, skipped };

std::string to_string(SuiteStatus s);

struct SuiteResult {
  std::string name;
  SuiteStatus status = SuiteStatus::pass;
  std::string witness;  // first failing instance, or the reason a suite was skipped
  friend bool operator==(const SuiteResult&, const SuiteResult&) = default;
};

struct ComponentRecord {
  ComponentDescriptor descriptor;
  /// Values of the representative eta, one per conjugacy class.
  std::vector<std::string> representative_values;
  std::vector<CompletionDescriptor> completions;
  friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct Report {
  // input echo
  std::int64_t l = 0;
  std::string group;
  std::string gamma;
  std::string verify;
  std::size_t series_precision = 0;
  std::vector<std::string> report_primes;
  std::size_t max_order = 0;
  // group data
  std::size_t group_order = 0;
  std::size_t class_count = 0;
  std::int64_t exponent = 1;
  std::int64_t gamma_order = 1;
  int m = 0;

  std::vector<ComponentRecord> components;
  std::int64_t dimension_total = 0;
  std::vector<SuiteResult> verification;

  bool all_passed() const;
  friend bool operator==(const Report&, const Report&) = default;
};

/// Machine-readable form: JSON with a fixed key order and two-space indent.
std::string emit_machine(const Report& report);
/// Inverse of emit_machine. Throws std::invalid_argument on malformed input.
Report parse_machine(std::string_view text);

std::string emit_text(const Report& report);

}  // namespace iwasawa
