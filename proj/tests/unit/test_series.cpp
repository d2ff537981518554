#include <random>

#include "doctest.h"
#include "iwasawa/error.hpp"
#include "iwasawa/series.hpp"

using namespace iwasawa;

namespace {

CyclotomicNumber integer(std::int64_t l, int e, std::int64_t n) { return CyclotomicNumber::from_integer(l, e, n); }

CyclotomicNumber random_integral(std::mt19937& rng, std::int64_t l, int e, std::int64_t scale) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<Rational> c(static_cast<std::size_t>(phi_prime_power(l, e)));
  for (auto& x : c) x = make_rational(coef(rng) * scale);
  return CyclotomicNumber::from_coefficients(l, e, c);
}

// Random series with given mu and lambda: coefficients below lambda divisible by l,
// coefficient lambda a unit, all scaled by l^mu.
TruncatedSeries random_series(std::mt19937& rng, std::int64_t l, int e, std::size_t M, int mu, std::size_t lambda) {
  std::vector<CyclotomicNumber> c;
  for (std::size_t i = 0; i < M; ++i) {
    if (i < lambda) c.push_back(random_integral(rng, l, e, l));
    else if (i == lambda) c.push_back(integer(l, e, 1) + random_integral(rng, l, e, l));
    else c.push_back(random_integral(rng, l, e, 1));
  }
  for (auto& x : c) x *= make_rational(ipow(l, mu));
  return TruncatedSeries::from_coefficients(l, e, M, c);
}

TruncatedSeries one_plus_t(std::int64_t l, int e, std::size_t M) {
  return TruncatedSeries::one(l, e, M) + TruncatedSeries::variable(l, e, M);
}

}  // namespace

TEST_CASE("truncated series arithmetic") {
  std::mt19937 rng(2);
  const auto a = random_series(rng, 3, 1, 8, 0, 2);
  const auto b = random_series(rng, 3, 1, 8, 0, 0);
  const auto c = random_series(rng, 3, 1, 8, 1, 1);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(series_arith(a, b, SeriesOp::mul) == a * b);
  CHECK(series_arith(a, b, SeriesOp::add) == a + b);
  CHECK(b.is_unit());
  CHECK_FALSE(a.is_unit());
  CHECK(a.t_order() == (a[0].is_zero() ? (a[1].is_zero() ? 2u : 1u) : 0u));
  const auto x = TruncatedSeries::variable(3, 0, 5);
  CHECK(x.pow(5).is_zero());
  CHECK(x.pow(4)[4].is_one());
  CHECK((a * TruncatedSeries::one(3, 1, 4)).precision() == 4);
  CHECK(to_string(one_plus_t(3, 0, 3)) == "1 + T + O(T^3)");
}

TEST_CASE("coefficients must be integral") {
  std::vector<CyclotomicNumber> c{CyclotomicNumber::from_rational(3, 1, make_rational(1, 3))};
  CHECK_THROWS_AS(TruncatedSeries::from_coefficients(3, 1, 4, c), AlgebraError);
  std::vector<CyclotomicNumber> ok{CyclotomicNumber::from_rational(3, 1, make_rational(1, 2))};
  CHECK_NOTHROW(TruncatedSeries::from_coefficients(3, 1, 4, ok));
}

TEST_CASE("Weierstrass preparation of simple series") {
  const std::size_t M = 8;
  const auto T = TruncatedSeries::variable(3, 0, M);
  const auto three = TruncatedSeries::one(3, 0, M) + TruncatedSeries::one(3, 0, M) + TruncatedSeries::one(3, 0, M);
  SUBCASE("T + 3") {
    const auto p = weierstrass_prepare(T + three);
    CHECK(p.mu == 0);
    CHECK(p.lambda() == 1);
    CHECK(p.unit == TruncatedSeries::one(3, 0, M));
  }
  SUBCASE("3(T + 3)") {
    const auto p = weierstrass_prepare(three * (T + three));
    CHECK(p.mu == 1);
    CHECK(p.lambda() == 1);
  }
  SUBCASE("(1+T)^3 - 1") {
    const auto f = one_plus_t(3, 0, M).pow(3) - TruncatedSeries::one(3, 0, M);
    const auto p = weierstrass_prepare(f);
    CHECK(p.mu == 0);
    CHECK(p.lambda() == 3);
    CHECK(p.distinguished == std::vector<CyclotomicNumber>{integer(3, 0, 0), integer(3, 0, 3), integer(3, 0, 3),
                                                          integer(3, 0, 1)});
    CHECK(p.unit == TruncatedSeries::one(3, 0, M));
  }
  SUBCASE("unit") {
    const auto p = weierstrass_prepare(one_plus_t(3, 0, M));
    CHECK(p.lambda() == 0);
    CHECK(p.mu == 0);
  }
}

TEST_CASE("Weierstrass preparation errors") {
  CHECK_THROWS_AS(weierstrass_prepare(TruncatedSeries(3, 1, 6)), AlgebraError);
  const auto f = TruncatedSeries::variable(3, 1, 6).pow(5) * TruncatedSeries::variable(3, 1, 6);
  CHECK_THROWS_AS(weierstrass_prepare(f), AlgebraError);
}

TEST_CASE("random recomposition") {
  std::mt19937 rng(1234);
  for (int it = 0; it < 40; ++it) {
    const int e = it % 3;
    const std::size_t lambda = static_cast<std::size_t>(it % 5);
    const int mu = it % 2;
    const auto f = random_series(rng, 3, e, 10, mu, lambda);
    const auto p = weierstrass_prepare(f);
    // mu counts the uniformizer 1 - zeta, and v(3) = phi(3^e)
    CHECK(p.mu == mu * (e == 0 ? 1 : phi_prime_power(3, e)));
    CHECK(p.lambda() == static_cast<std::int64_t>(lambda));
    CHECK(is_distinguished(p.distinguished));
    CHECK(p.unit.is_unit());
    CHECK(recompose(p, f.precision()) == f);
  }
}

TEST_CASE("distinguished polynomials") {
  CHECK(is_distinguished({integer(3, 1, 3), integer(3, 1, 1)}));
  CHECK(is_distinguished({integer(3, 1, 1)}));
  CHECK_FALSE(is_distinguished({integer(3, 1, 1), integer(3, 1, 1)}));
  CHECK_FALSE(is_distinguished({integer(3, 1, 3), integer(3, 1, 2)}));
  CHECK(is_distinguished({uniformizer(3, 1), integer(3, 1, 1)}));
}

TEST_CASE("Galois norm of a series equals the product of conjugate series") {
  const std::size_t M = 6;
  const auto z9 = CyclotomicNumber::zeta_power(3, 2, 1);
  const auto f = TruncatedSeries::one(3, 2, M) + z9 * TruncatedSeries::variable(3, 2, M) +
                 (z9 * z9) * TruncatedSeries::variable(3, 2, M).pow(3);
  TruncatedSeries prod = TruncatedSeries::one(3, 2, M);
  for (std::int64_t k : relative_galois_coset(3, 2, 1)) {
    std::vector<CyclotomicNumber> c;
    for (const auto& x : f.coefficients()) c.push_back(galois_apply(GaloisElement(3, 2, k), x));
    prod = prod * TruncatedSeries::from_coefficients(3, 2, M, c);
  }
  const auto n = series_galois_norm(f, 1);
  CHECK(n.exponent() == 1);
  for (std::size_t i = 0; i < M; ++i) CHECK(n[i] == prod[i]);
}

TEST_CASE("norm-order certificates") {
  for (int e = 1; e <= 3; ++e) {
    for (int r = 0; r < e; ++r) {
      for (int t = 0; t <= r + 1; ++t) {
        const auto cert = norm_order_certificate(3, e, r, t);
        CHECK(cert.lattice_verified);
        CHECK(cert.traces.size() == static_cast<std::size_t>(ipow(3, r)));
        CHECK((cert.verdict == NormVerdict::obstructed) == (t < r));
      }
    }
  }
  CHECK_THROWS_AS(norm_order_certificate(3, 2, 2, 0), AlgebraError);
  CHECK_THROWS_AS(norm_order_certificate(4, 2, 1, 0), AlgebraError);
}

TEST_CASE("unit reduction") {
  const std::size_t M = 5;
  // N(1+T) from level 2 to level 1 is (1+T)^3
  const auto r1 = unit_reduction_check(one_plus_t(3, 2, M), 1, 1);
  CHECK(r1.verdict == UnitVerdict::norm_matches);
  CHECK(r1.constant_norm.is_one());
  // 1 + zeta_9 T has linear trace 0, never 1
  const auto f = TruncatedSeries::one(3, 2, M) + CyclotomicNumber::zeta_power(3, 2, 1) * TruncatedSeries::variable(3, 2, M);
  const auto r0 = unit_reduction_check(f, 1, 0);
  CHECK(r0.verdict == UnitVerdict::obstructed);
  CHECK(r0.linear_trace.is_zero());
  CHECK_THROWS_AS(unit_reduction_check(TruncatedSeries::variable(3, 2, M), 1, 0), AlgebraError);
}

// No a_0, a_1 in Z[zeta_9] with small coordinates satisfy N(a_0) = 1 and
// Tr(a_1/a_0) = 1 down to Q(zeta_3): the obstruction at t = 0 < r = 1.
TEST_CASE("brute-force search finds no degree-one norm lift") {
  std::vector<CyclotomicNumber> units;
  std::vector<int> digits(6, -1);
  std::vector<CyclotomicNumber> small;
  while (true) {
    std::vector<Rational> c;
    for (int d : digits) c.push_back(make_rational(d));
    small.push_back(CyclotomicNumber::from_coefficients(3, 2, c));
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 1) digits[i++] = -1;
    if (i == digits.size()) break;
    ++digits[i];
  }
  for (const auto& a : small) {
    if (!a.is_zero() && rel_norm(a, 1).is_one()) units.push_back(a);
  }
  CHECK_FALSE(units.empty());
  std::size_t hits = 0;
  for (const auto& a0 : units) {
    for (const auto& a1 : small) hits += rel_trace(a1 / a0, 1).is_one();
  }
  CHECK(hits == 0);
}
