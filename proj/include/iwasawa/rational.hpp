#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace iwasawa {

/// Exact rational, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// l-adic valuation of a nonzero rational; nullopt for zero.
std::optional<std::int64_t> rational_valuation(const Rational& q, std::int64_t l);

/// Parses "a" or "a/b" (optional sign). Throws AlgebraError on bad input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

// Small integer helpers shared across modules.
std::int64_t ipow(std::int64_t base, int exp);
bool is_prime(std::int64_t n);
/// Returns e with n == l^e, or nullopt when n is not a power of l.
std::optional<int> log_exact(std::int64_t n, std::int64_t l);
/// Euler phi of l^e for prime l.
std::int64_t phi_prime_power(std::int64_t l, int e);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);
std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace iwasawa
