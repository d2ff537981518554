#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iwasawa/clifford.hpp"
#include "iwasawa/rational.hpp"

namespace iwasawa {

enum class PrimeKind { T, f, ell };

/// Height-one prime of o_L[[T]]: (T), (f) for a distinguished f, or (ell).
struct PrimeSpec {
  PrimeKind kind = PrimeKind::T;
  std::vector<Rational> coefficients;  // f only: low degree first, monic
  std::int64_t degree() const { return kind == PrimeKind::f ? static_cast<std::int64_t>(coefficients.size()) - 1 : 1; }
  /// "T", "ell" or "f:c0:c1:...:1".
  std::string label() const;
  friend bool operator==(const PrimeSpec&, const PrimeSpec&) = default;
};

/// Parses a prime label. Throws AlgebraError on malformed input.
PrimeSpec parse_prime(std::string_view text);

/// Completed skew field at (ell) when s > 1, with the norm witness
/// N(1 - zeta) = nu (1 - xi) from Q(zeta_{l^{e_eta}}) down to the center.
struct SkewCompletion {
  std::int64_t index = 1;
  std::int64_t ramification = 1;
  std::int64_t residue_degree = 1;
  bool residue_commutative = true;
  std::string residue_polynomial;
  std::string witness_norm;
  std::string witness_unit;
  std::int64_t witness_unit_valuation = 0;
  bool witness_verified = false;
  friend bool operator==(const SkewCompletion&, const SkewCompletion&) = default;
};

struct CompletionDescriptor {
  std::string prime;
  std::string completed_center;
  std::string residue_field;
  /// [residue : Q_l] for (T) and (f); 1 over F_l((Tbar)) for (ell).
  std::int64_t residue_degree = 1;
  int cd = 3;
  std::string sk1_trivial;
  /// For (f): "certified" when d = 1, otherwise "assumed". Empty for other kinds.
  std::string irreducibility;
  std::optional<SkewCompletion> skew;
  friend bool operator==(const CompletionDescriptor&, const CompletionDescriptor&) = default;
};

/// Throws AlgebraError when an f-prime is not a distinguished polynomial.
CompletionDescriptor completion_descriptor(const ComponentDescriptor& component, const PrimeSpec& prime, std::int64_t l);

}  // namespace iwasawa
