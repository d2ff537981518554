#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iwasawa/rational.hpp"

namespace iwasawa {

/// Element of Q(zeta_{l^e}) for an odd prime l, stored in the power basis
/// 1, z, ..., z^{phi(l^e)-1} reduced modulo Phi_{l^e}. e = 0 means Q.
///
/// The representation is canonical: two values are equal iff their
/// coefficient vectors are equal. Arithmetic between different exponents
/// lifts the smaller field into the larger one; the exponent never shrinks
/// implicitly (see restrict_to / value_field_conductor).
class CyclotomicNumber {
 public:
  /// Rational zero not yet bound to a prime; binds to the other operand's l.
  CyclotomicNumber() = default;
  CyclotomicNumber(std::int64_t l, int e);

  static CyclotomicNumber zero(std::int64_t l, int e) { return {l, e}; }
  static CyclotomicNumber one(std::int64_t l, int e);
  static CyclotomicNumber from_rational(std::int64_t l, int e, const Rational& q);
  static CyclotomicNumber from_integer(std::int64_t l, int e, std::int64_t n);
  /// zeta_{l^e}^i for any integer i.
  static CyclotomicNumber zeta_power(std::int64_t l, int e, std::int64_t i);
  /// Coefficients must have length phi(l^e).
  static CyclotomicNumber from_coefficients(std::int64_t l, int e, std::vector<Rational> coeffs);

  std::int64_t prime() const noexcept { return l_; }
  int exponent() const noexcept { return e_; }
  std::int64_t conductor() const;
  std::size_t degree() const noexcept { return coeffs_.size(); }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; equals the value when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  /// Image under Q(zeta_{l^e}) -> Q(zeta_{l^{e2}}), e2 >= e.
  CyclotomicNumber lift_to(int e2) const;
  /// True when the value lies in Q(zeta_{l^{e2}}), e2 <= e (power-basis support test).
  bool lies_in(int e2) const;
  /// Inverse of lift_to. Throws AlgebraError when the value is not in the subfield.
  CyclotomicNumber restrict_to(int e2) const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& q);

  CyclotomicNumber inverse() const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& q) { return a *= q; }
  friend CyclotomicNumber operator*(const Rational& q, CyclotomicNumber a) { return a *= q; }

  /// Exact equality; operands at different exponents are compared after lifting.
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  /// Total order on coefficient vectors (after lifting to a common exponent).
  friend std::strong_ordering operator<=>(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  friend CyclotomicNumber reduce_cyclic(std::int64_t l, int e, std::vector<Rational>&& buf);

  std::int64_t l_ = 0;
  int e_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// Reduces a vector indexed by exponents modulo l^e (length l^e) into the power basis.
CyclotomicNumber reduce_cyclic(std::int64_t l, int e, std::vector<Rational>&& buf);

/// sigma_k : zeta -> zeta^k on Q(zeta_{l^e}); k is a unit modulo l^e.
class GaloisElement {
 public:
  GaloisElement(std::int64_t l, int e, std::int64_t k);
  static GaloisElement identity(std::int64_t l, int e) { return {l, e, 1}; }
  /// Complex conjugation, k = -1.
  static GaloisElement conjugation(std::int64_t l, int e) { return {l, e, -1}; }

  std::int64_t prime() const noexcept { return l_; }
  int exponent() const noexcept { return e_; }
  std::int64_t k() const noexcept { return k_; }
  std::int64_t modulus() const;

  /// (this o other)(x) = this(other(x)); exponents multiply.
  GaloisElement compose(const GaloisElement& other) const;
  GaloisElement inverse() const;
  GaloisElement power(std::int64_t n) const;
  std::int64_t order() const;
  bool is_identity() const { return k_ == 1 % modulus(); }

  friend bool operator==(const GaloisElement&, const GaloisElement&) = default;

 private:
  std::int64_t l_;
  int e_;
  std::int64_t k_;
};

/// Units k modulo l^e in increasing order.
std::vector<std::int64_t> unit_residues(std::int64_t l, int e);
/// Least generator of the cyclic group (Z/l^e)^x.
std::int64_t primitive_root(std::int64_t l, int e);

CyclotomicNumber galois_apply(const GaloisElement& s, const CyclotomicNumber& a);

/// Exponents k mod l^e of the Galois elements fixing Q(zeta_{l^{e2}}).
std::vector<std::int64_t> relative_galois_coset(std::int64_t l, int e, int e2);

/// Trace from Q(zeta_{l^e}) down to Q(zeta_{l^{e2}}); result is expressed at e2.
CyclotomicNumber rel_trace(const CyclotomicNumber& a, int e2);
/// Norm from Q(zeta_{l^e}) down to Q(zeta_{l^{e2}}); result is expressed at e2.
CyclotomicNumber rel_norm(const CyclotomicNumber& a, int e2);

/// l-adic valuation normalised by v(1 - zeta_{l^e}) = 1 (v(l) = 1 when e = 0).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(std::int64_t v) : finite_(true), value_(v) {}

  bool is_infinite() const noexcept { return !finite_; }
  std::int64_t value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);
  friend Valuation operator+(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  bool finite_ = false;
  std::int64_t value_ = 0;
};

std::string to_string(const Valuation& v);

Valuation l_valuation(const CyclotomicNumber& a);

/// Smallest e2 such that every value lies in Q(zeta_{l^{e2}}), decided by
/// invariance under the Galois elements fixing that subfield.
int value_field_conductor(std::span<const CyclotomicNumber> values);

/// 1 - zeta_{l^e} for e >= 1, and l itself for e = 0.
CyclotomicNumber uniformizer(std::int64_t l, int e);

/// Human-readable form, e.g. "1 - z9 + 2/3*z9^4".
std::string to_string(const CyclotomicNumber& a);

}  // namespace iwasawa
