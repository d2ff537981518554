#include "iwasawa/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

void check_prime(std::int64_t l) {
  if (l < 3 || !is_prime(l)) throw AlgebraError("cyclotomic prime must be an odd prime, got " + std::to_string(l));
}

// Binds default-constructed (l == 0) operands and checks primes agree.
std::int64_t common_prime(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.prime() == 0) return b.prime();
  if (b.prime() == 0 || a.prime() == b.prime()) return a.prime();
  throw AlgebraError("mismatched cyclotomic primes " + std::to_string(a.prime()) + " and " +
                     std::to_string(b.prime()));
}

// Polynomial helpers over Q for the inverse (extended Euclid modulo Phi).
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool is_zero_poly(const Poly& p) { return p.size() == 1 && p[0] == 0; }

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

void poly_divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  const std::size_t dd = den.size() - 1;
  if (rem.size() - 1 < dd) {
    quot = Poly{Rational(0)};
    return;
  }
  quot.assign(rem.size() - dd, Rational(0));
  const Rational lead = den.back();
  for (std::size_t i = rem.size(); i-- > dd;) {
    if (rem[i] == 0) continue;
    Rational c = rem[i] / lead;
    quot[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= c * den[j];
  }
  rem.resize(std::max<std::size_t>(dd, 1));
  trim(rem);
  trim(quot);
}

CyclotomicNumber bound(const CyclotomicNumber& x, std::int64_t l) {
  if (x.prime() != 0 || l == 0) return x;
  return CyclotomicNumber::from_rational(l, 0, x.rational_part());
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(std::int64_t l, int e) : l_(l), e_(e) {
  check_prime(l);
  if (e < 0) throw AlgebraError("negative cyclotomic exponent");
  coeffs_.assign(static_cast<std::size_t>(phi_prime_power(l, e)), Rational(0));
}

CyclotomicNumber CyclotomicNumber::one(std::int64_t l, int e) {
  CyclotomicNumber r(l, e);
  r.coeffs_[0] = 1;
  return r;
}

CyclotomicNumber CyclotomicNumber::from_rational(std::int64_t l, int e, const Rational& q) {
  CyclotomicNumber r(l, e);
  r.coeffs_[0] = q;
  return r;
}

CyclotomicNumber CyclotomicNumber::from_integer(std::int64_t l, int e, std::int64_t n) {
  return from_rational(l, e, make_rational(n));
}

CyclotomicNumber CyclotomicNumber::zeta_power(std::int64_t l, int e, std::int64_t i) {
  check_prime(l);
  const std::int64_t n = ipow(l, e);
  std::vector<Rational> buf(static_cast<std::size_t>(n), Rational(0));
  buf[static_cast<std::size_t>(mod_floor(i, n))] = 1;
  return reduce_cyclic(l, e, std::move(buf));
}

CyclotomicNumber CyclotomicNumber::from_coefficients(std::int64_t l, int e, std::vector<Rational> coeffs) {
  CyclotomicNumber r(l, e);
  if (coeffs.size() != r.coeffs_.size())
    throw AlgebraError("coefficient vector has length " + std::to_string(coeffs.size()) + ", expected " +
                       std::to_string(r.coeffs_.size()));
  r.coeffs_ = std::move(coeffs);
  for (auto& c : r.coeffs_) c.canonicalize();
  return r;
}

std::int64_t CyclotomicNumber::conductor() const { return ipow(l_ == 0 ? 1 : l_, e_); }

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_one() const {
  return coeffs_[0] == 1 && std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

CyclotomicNumber CyclotomicNumber::lift_to(int e2) const {
  if (e2 < e_) throw AlgebraError("lift_to: target exponent below current exponent");
  if (e2 == e_) return *this;
  if (l_ == 0) throw AlgebraError("lift_to: value is not bound to a prime");
  CyclotomicNumber r(l_, e2);
  const std::int64_t step = ipow(l_, e2 - e_);
  // zeta_{l^e} = zeta_{l^e2}^{step}; indices stay below phi(l^e2), no reduction needed.
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return r;
}

bool CyclotomicNumber::lies_in(int e2) const {
  if (e2 >= e_) return true;
  if (e2 == 0) return is_rational();
  const auto step = static_cast<std::size_t>(ipow(l_, e_ - e2));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (i % step != 0 && coeffs_[i] != 0) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::restrict_to(int e2) const {
  if (e2 >= e_) return lift_to(e2);
  if (!lies_in(e2))
    throw AlgebraError("value " + to_string(*this) + " does not lie in Q(zeta_" + std::to_string(ipow(l_, e2)) +
                       ")");
  CyclotomicNumber r(l_, e2);
  const auto step = static_cast<std::size_t>(ipow(l_, e_ - e2));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i * step];
  return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  const std::int64_t l = common_prime(*this, rhs);
  if (l_ == 0 && l != 0) *this = bound(*this, l);
  if (rhs.l_ == 0 && l != 0) return *this += bound(rhs, l);
  if (rhs.e_ > e_) *this = lift_to(rhs.e_);
  if (rhs.e_ < e_) return *this += rhs.lift_to(e_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) { return *this += -rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) { return *this = *this * rhs; }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::int64_t l = common_prime(a, b);
  if ((a.l_ == 0 || b.l_ == 0) && l != 0 && (a.e_ != 0 || b.e_ != 0)) return bound(a, l) * bound(b, l);
  const int e = std::max(a.e_, b.e_);
  if (a.e_ != e) return a.lift_to(e) * b;
  if (b.e_ != e) return a * b.lift_to(e);
  if (e == 0) {
    CyclotomicNumber r = a;
    r.l_ = l;
    r.coeffs_[0] *= b.coeffs_[0];
    return r;
  }
  const auto n = static_cast<std::size_t>(ipow(l, e));
  std::vector<Rational> buf(n, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      buf[k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return reduce_cyclic(l, e, std::move(buf));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw AlgebraError("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
  if (e_ == 0) {
    CyclotomicNumber r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid against Phi_{l^e}(X) = sum_{j<l} X^{j l^{e-1}}.
  const auto q = static_cast<std::size_t>(ipow(l_, e_ - 1));
  Poly phi(static_cast<std::size_t>(l_ - 1) * q + 1, Rational(0));
  for (std::int64_t j = 0; j < l_; ++j) phi[static_cast<std::size_t>(j) * q] = 1;
  Poly r0 = phi, r1 = coeffs_;
  trim(r1);
  Poly s0{Rational(0)}, s1{Rational(1)};
  while (r1.size() > 1) {
    Poly quot, rem;
    poly_divmod(r0, r1, quot, rem);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (is_zero_poly(r1)) throw DefectError("inverse: value shares a factor with the cyclotomic polynomial");
  }
  const Rational c = r1[0];
  // s1 may exceed the basis length; fold it back through the cyclic reduction.
  const auto n = static_cast<std::size_t>(ipow(l_, e_));
  std::vector<Rational> buf(n, Rational(0));
  for (std::size_t i = 0; i < s1.size(); ++i) buf[i % n] += s1[i] / c;
  return reduce_cyclic(l_, e_, std::move(buf));
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.e_ != b.e_) {
    const int e = std::max(a.e_, b.e_);
    return a.lift_to(e) == b.lift_to(e);
  }
  if (a.l_ != 0 && b.l_ != 0 && a.l_ != b.l_) return false;
  return a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.e_ != b.e_) {
    const int e = std::max(a.e_, b.e_);
    return a.lift_to(e) <=> b.lift_to(e);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CyclotomicNumber reduce_cyclic(std::int64_t l, int e, std::vector<Rational>&& buf) {
  CyclotomicNumber r(l, e);
  const auto n = static_cast<std::size_t>(ipow(l, e));
  if (buf.size() != n) throw DefectError("reduce_cyclic: buffer length mismatch");
  if (e == 0) {
    r.coeffs_[0] = std::move(buf[0]);
    return r;
  }
  const auto q = static_cast<std::size_t>(ipow(l, e - 1));
  const std::size_t phi = n - q;
  // X^k = -sum_{j=0}^{l-2} X^{k - phi + j q} for k >= phi.
  for (std::size_t k = n; k-- > phi;) {
    if (buf[k] == 0) continue;
    const Rational c = buf[k];
    buf[k] = 0;
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(l); ++j) buf[k - phi + j * q] -= c;
  }
  buf.resize(phi);
  r.coeffs_ = std::move(buf);
  return r;
}

// ---------------------------------------------------------------------------

GaloisElement::GaloisElement(std::int64_t l, int e, std::int64_t k) : l_(l), e_(e) {
  check_prime(l);
  const std::int64_t n = ipow(l, e);
  k_ = mod_floor(k, n);
  if (e > 0 && k_ % l == 0)
    throw AlgebraError("Galois exponent " + std::to_string(k) + " is not a unit modulo " + std::to_string(n));
}

std::int64_t GaloisElement::modulus() const { return ipow(l_, e_); }

GaloisElement GaloisElement::compose(const GaloisElement& other) const {
  if (other.l_ != l_ || other.e_ != e_) throw AlgebraError("composing Galois elements of different fields");
  return {l_, e_, (k_ * other.k_) % modulus()};
}

GaloisElement GaloisElement::power(std::int64_t n) const {
  if (n < 0) return inverse().power(-n);
  GaloisElement r = identity(l_, e_);
  GaloisElement b = *this;
  while (n > 0) {
    if (n & 1) r = r.compose(b);
    b = b.compose(b);
    n >>= 1;
  }
  return r;
}

std::int64_t GaloisElement::order() const {
  std::int64_t ord = 1;
  std::int64_t x = k_;
  const std::int64_t one = 1 % modulus();
  while (x != one) {
    x = (x * k_) % modulus();
    ++ord;
  }
  return ord;
}

GaloisElement GaloisElement::inverse() const { return power(order() - 1); }

std::vector<std::int64_t> unit_residues(std::int64_t l, int e) {
  const std::int64_t n = ipow(l, e);
  std::vector<std::int64_t> out;
  if (e == 0) return {0};
  for (std::int64_t k = 1; k < n; ++k)
    if (k % l != 0) out.push_back(k);
  return out;
}

std::int64_t primitive_root(std::int64_t l, int e) {
  if (e == 0) return 0;
  const std::int64_t target = phi_prime_power(l, e);
  for (std::int64_t g = 2; g < ipow(l, e); ++g) {
    if (g % l == 0) continue;
    if (GaloisElement(l, e, g).order() == target) return g;
  }
  return 1;
}

CyclotomicNumber galois_apply(const GaloisElement& s, const CyclotomicNumber& a) {
  if (a.prime() != 0 && a.prime() != s.prime()) throw AlgebraError("galois_apply: mismatched prime");
  if (a.exponent() != s.exponent())
    throw AlgebraError("galois_apply: element of Q(zeta_" + std::to_string(s.modulus()) +
                       ") applied to a value of Q(zeta_" + std::to_string(a.conductor()) + ")");
  if (s.exponent() == 0 || s.is_identity()) return a;
  const auto n = static_cast<std::size_t>(s.modulus());
  std::vector<Rational> buf(n, Rational(0));
  const auto coeffs = a.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    buf[(i * static_cast<std::size_t>(s.k())) % n] += coeffs[i];
  }
  return reduce_cyclic(s.prime(), s.exponent(), std::move(buf));
}

std::vector<std::int64_t> relative_galois_coset(std::int64_t l, int e, int e2) {
  if (e2 > e || e2 < 0) throw AlgebraError("relative Galois group: target exponent out of range");
  if (e2 == 0) return unit_residues(l, e);
  const std::int64_t step = ipow(l, e2);
  std::vector<std::int64_t> out;
  for (std::int64_t j = 0; j < ipow(l, e - e2); ++j) out.push_back(1 + j * step);
  return out;
}

CyclotomicNumber rel_trace(const CyclotomicNumber& a, int e2) {
  if (e2 > a.exponent()) throw AlgebraError("rel_trace: target field is not a subfield");
  if (e2 == a.exponent()) return a;
  CyclotomicNumber sum(a.prime(), a.exponent());
  for (std::int64_t k : relative_galois_coset(a.prime(), a.exponent(), e2))
    sum += galois_apply(GaloisElement(a.prime(), a.exponent(), k), a);
  if (!sum.lies_in(e2)) throw DefectError("rel_trace: trace left the target field");
  return sum.restrict_to(e2);
}

CyclotomicNumber rel_norm(const CyclotomicNumber& a, int e2) {
  if (e2 > a.exponent()) throw AlgebraError("rel_norm: target field is not a subfield");
  if (e2 == a.exponent()) return a;
  CyclotomicNumber prod = CyclotomicNumber::one(a.prime(), a.exponent());
  for (std::int64_t k : relative_galois_coset(a.prime(), a.exponent(), e2))
    prod *= galois_apply(GaloisElement(a.prime(), a.exponent(), k), a);
  if (!prod.lies_in(e2)) throw DefectError("rel_norm: norm left the target field");
  return prod.restrict_to(e2);
}

// ---------------------------------------------------------------------------

std::int64_t Valuation::value() const {
  if (!finite_) throw AlgebraError("infinite valuation has no finite value");
  return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;  // infinity is largest
  return a.value_ <=> b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(a.value_ + b.value_);
}

std::string to_string(const Valuation& v) { return v.is_infinite() ? "inf" : std::to_string(v.value()); }

Valuation l_valuation(const CyclotomicNumber& a) {
  if (a.is_zero()) return Valuation::infinity();
  if (a.prime() == 0) throw AlgebraError("l_valuation: value is not bound to a prime");
  // Norm down one level at a time; N_{Q(zeta)/Q}(1 - zeta) = l fixes the scale.
  CyclotomicNumber x = a;
  for (int level = a.exponent(); level > 0; --level) x = rel_norm(x, level - 1);
  return Valuation(*rational_valuation(x.rational_part(), a.prime()));
}

int value_field_conductor(std::span<const CyclotomicNumber> values) {
  int top = 0;
  std::int64_t l = 0;
  for (const auto& v : values) {
    top = std::max(top, v.exponent());
    if (v.prime() != 0) l = v.prime();
  }
  if (top == 0) return 0;
  for (int e2 = 0; e2 < top; ++e2) {
    // The subgroup fixing Q(zeta_{l^e2}) is cyclic; invariance under a generator suffices.
    const std::int64_t gen = e2 == 0 ? primitive_root(l, top) : 1 + ipow(l, e2);
    const GaloisElement s(l, top, gen);
    bool fixed = true;
    for (const auto& v : values) {
      const CyclotomicNumber lifted = v.lift_to(top);
      if (galois_apply(s, lifted) != lifted) {
        fixed = false;
        break;
      }
    }
    if (fixed) return e2;
  }
  return top;
}

CyclotomicNumber uniformizer(std::int64_t l, int e) {
  if (e == 0) return CyclotomicNumber::from_integer(l, 0, l);
  return CyclotomicNumber::one(l, e) - CyclotomicNumber::zeta_power(l, e, 1);
}

std::string to_string(const CyclotomicNumber& a) {
  if (a.exponent() == 0) return to_string(a.rational_part());
  const std::string z = "z" + std::to_string(a.conductor());
  std::ostringstream os;
  bool first = true;
  const auto coeffs = a.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << z;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace iwasawa
