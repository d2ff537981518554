#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "iwasawa/cyclotomic.hpp"

namespace iwasawa {

/// Element of o[[T]] modulo T^M, o the valuation ring of Q(zeta_{l^e}) at l.
/// Coefficients are exact and must have non-negative valuation.
class TruncatedSeries {
 public:
  TruncatedSeries(std::int64_t l, int e, std::size_t precision);
  /// Pads with zeros or truncates to the precision. Throws AlgebraError for
  /// coefficients outside the valuation ring.
  static TruncatedSeries from_coefficients(std::int64_t l, int e, std::size_t precision,
                                           const std::vector<CyclotomicNumber>& coeffs);
  static TruncatedSeries one(std::int64_t l, int e, std::size_t precision);
  /// The variable T (gamma^w = 1 + T).
  static TruncatedSeries variable(std::int64_t l, int e, std::size_t precision);

  std::int64_t prime() const noexcept { return l_; }
  int exponent() const noexcept { return e_; }
  std::size_t precision() const noexcept { return coeffs_.size(); }
  const CyclotomicNumber& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<CyclotomicNumber>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Least index with a nonzero coefficient; precision() when zero.
  std::size_t t_order() const;
  bool is_unit() const;

  TruncatedSeries truncate(std::size_t precision) const;
  TruncatedSeries pow(std::int64_t n) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const CyclotomicNumber& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::int64_t l_;
  int e_;
  std::vector<CyclotomicNumber> coeffs_;
};

enum class SeriesOp { add, mul };
TruncatedSeries series_arith(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op);

std::string to_string(const TruncatedSeries& f);

/// f = ell^mu * distinguished * unit modulo T^M.
struct PreparationResult {
  std::int64_t mu = 0;
  std::vector<CyclotomicNumber> distinguished;  // low degree first, monic
  TruncatedSeries unit;
  std::int64_t lambda() const { return static_cast<std::int64_t>(distinguished.size()) - 1; }
};

/// Monic with every lower coefficient of positive valuation.
bool is_distinguished(const std::vector<CyclotomicNumber>& poly);

/// Weierstrass preparation at finite precision. mu and lambda are canonical;
/// the distinguished polynomial is an l-adic approximation fine enough that
/// the exact quotient f / (ell^mu F) is a unit modulo T^M. Throws
/// AlgebraError for f = 0 and PrecisionError when lambda >= M.
PreparationResult weierstrass_prepare(const TruncatedSeries& f);

/// ell^mu * F * u as a series of the input's precision.
TruncatedSeries recompose(const PreparationResult& p, std::size_t precision);

/// Product of the Galois conjugates of f fixing Q(zeta_{l^{e2}}), expressed at e2.
TruncatedSeries series_galois_norm(const TruncatedSeries& f, int e2);

enum class NormVerdict { representable, obstructed };

struct NormOrderCertificate {
  std::int64_t l = 0;
  int e = 0, r = 0, t = 0;
  /// Tr(zeta^i) from level e to level e - r for 0 <= i < l^r.
  std::vector<CyclotomicNumber> traces;
  /// Tr(1) = l^r and Tr(zeta^i) = 0 otherwise.
  bool lattice_verified = false;
  NormVerdict verdict = NormVerdict::representable;
};

/// (1+T)^{l^t} is a norm from level e to e - r only if t >= r.
NormOrderCertificate norm_order_certificate(std::int64_t l, int e, int r, int t);

enum class UnitVerdict { norm_matches, obstructed, inconclusive };

struct UnitReduction {
  CyclotomicNumber constant_norm;  // N(f_0)
  CyclotomicNumber linear_trace;   // Tr(f_1 / f_0)
  UnitVerdict verdict = UnitVerdict::inconclusive;
};

/// Necessary conditions for N(f) = (1+T)^{l^t}: N(f_0) = 1 and Tr(f_1/f_0) = l^t.
UnitReduction unit_reduction_check(const TruncatedSeries& f, int e2, int t);

std::string to_string(NormVerdict v);
std::string to_string(UnitVerdict v);

}  // namespace iwasawa
