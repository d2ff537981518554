#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iwasawa/completion.hpp"
#include "iwasawa/finite_group.hpp"

namespace iwasawa {

enum class VerifyLevel { fast, full };

std::string to_string(VerifyLevel v);
std::optional<VerifyLevel> parse_verify_level(std::string_view text);

/// gamma on H: generator words (abelian and preset groups) or an explicit
/// permutation (table groups).
struct GammaSpec {
  std::map<std::size_t, std::string> words;  // generator index -> word
  std::vector<std::uint32_t> permutation;    // empty unless given
  friend bool operator==(const GammaSpec&, const GammaSpec&) = default;
};

struct Options {
  std::size_t series_precision = 16;
  VerifyLevel verify = VerifyLevel::fast;
  std::vector<PrimeSpec> report_primes{PrimeSpec{PrimeKind::T, {}}, PrimeSpec{PrimeKind::ell, {}}};
  std::size_t max_order = kDefaultOrderCap;
  friend bool operator==(const Options&, const Options&) = default;
};

struct InputDocument {
  std::int64_t l = 0;
  GroupSpec group;
  GammaSpec gamma;
  Options options;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

struct Diagnostic {
  std::size_t line = 0;  // 1-based; 0 when not tied to a line
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct ParseResult {
  std::optional<InputDocument> document;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return document.has_value() && diagnostics.empty(); }
};

/// Parses and validates the input document. Never throws; every problem
/// becomes a positioned diagnostic. A max_order override replaces the
/// document's option before the group is validated.
ParseResult parse_input(std::string_view text, std::optional<std::size_t> max_order_override = std::nullopt);

/// Builds gamma for an already built group.
GroupAutomorphism build_gamma(const FiniteLGroup& group, const GammaSpec& gamma);

/// Short human-readable forms used in report echoes.
std::string describe_group(const GroupSpec& spec);
std::string describe_gamma(const GammaSpec& gamma);

}  // namespace iwasawa
