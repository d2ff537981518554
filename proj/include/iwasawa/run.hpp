#pragma once

#include <vector>

#include "iwasawa/character_table.hpp"
#include "iwasawa/clifford.hpp"
#include "iwasawa/finite_group.hpp"
#include "iwasawa/input.hpp"
#include "iwasawa/report.hpp"

namespace iwasawa {

/// Group, gamma, table and components for one document.
struct Analysis {
  FiniteLGroup group;
  GroupAutomorphism gamma;
  std::vector<Character> table;
  std::vector<ComponentDescriptor> components;
};

/// Throws GroupError when the group exceeds the order cap or gamma is invalid.
Analysis analyze(const InputDocument& doc);

/// Suites above these sizes are reported as skipped.
inline constexpr std::size_t kOrthogonalityClassCap = 243;
inline constexpr std::size_t kIdempotentOrderCap = 27;

/// fast: group, gamma, table, orthogonality, degrees, idempotents, dimension,
/// Roquette, G_0 and completion witnesses. full adds norm-order certificates,
/// unit reductions and Weierstrass round trips for every component with s > 1.
std::vector<SuiteResult> verify(const Analysis& a, VerifyLevel level, std::size_t series_precision);

Report run(const InputDocument& doc);

/// 0 when every suite passed or was skipped, 2 otherwise.
int exit_code(const Report& report);

}  // namespace iwasawa
