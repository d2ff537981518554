#include "iwasawa/rational.hpp"

#include <cctype>

#include "iwasawa/error.hpp"

namespace iwasawa {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw AlgebraError("rational with zero denominator");
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

std::optional<std::int64_t> rational_valuation(const Rational& q, std::int64_t l) {
  if (q == 0) return std::nullopt;
  const Integer lz(static_cast<long>(l));
  std::int64_t v = 0;
  Integer num = q.get_num();
  Integer den = q.get_den();
  while (mpz_divisible_p(num.get_mpz_t(), lz.get_mpz_t())) {
    num /= lz;
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), lz.get_mpz_t())) {
    den /= lz;
    --v;
  }
  return v;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw AlgebraError("empty rational");
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') ++i;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '/') {
      if (seen_slash) throw AlgebraError("malformed rational '" + s + "'");
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw AlgebraError("malformed rational '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw AlgebraError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw AlgebraError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw AlgebraError("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<int> log_exact(std::int64_t n, std::int64_t l) {
  if (n < 1 || l < 2) return std::nullopt;
  int e = 0;
  while (n % l == 0) {
    n /= l;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return e;
}

std::int64_t phi_prime_power(std::int64_t l, int e) {
  if (e == 0) return 1;
  return ipow(l, e - 1) * (l - 1);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace iwasawa
