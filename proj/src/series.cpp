#include "iwasawa/series.hpp"

#include <algorithm>

#include "iwasawa/error.hpp"
#include "iwasawa/rational.hpp"

namespace iwasawa {

namespace {

using Poly = std::vector<CyclotomicNumber>;

bool ring_integral(const CyclotomicNumber& x, std::int64_t l) {
  // The power basis is an integral basis of Z_l[zeta].
  for (const auto& c : x.coefficients()) {
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(l))) return false;
  }
  return true;
}

bool is_ring_unit(const CyclotomicNumber& x) {
  auto v = l_valuation(x);
  return !v.is_infinite() && v.value() == 0;
}

CyclotomicNumber at(const CyclotomicNumber& x, std::int64_t l, int e) {
  return x.exponent() == e ? x : x.lift_to(e) + CyclotomicNumber::zero(l, e);
}

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t n, std::int64_t l, int e) {
  Poly out(n, CyclotomicNumber::zero(l, e));
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Power-series inverse modulo T^n; a[0] must be invertible.
Poly inverse_trunc(const Poly& a, std::size_t n, std::int64_t l, int e) {
  Poly out(n, CyclotomicNumber::zero(l, e));
  const CyclotomicNumber inv0 = a[0].inverse();
  for (std::size_t j = 0; j < n; ++j) {
    CyclotomicNumber acc = j == 0 ? CyclotomicNumber::one(l, e) : CyclotomicNumber::zero(l, e);
    for (std::size_t i = 1; i <= j && i < a.size(); ++i) acc -= a[i] * out[j - i];
    out[j] = acc * inv0;
  }
  return out;
}

// Exact quotient num / den modulo T^n; den[0] must be nonzero.
Poly divide_trunc(const Poly& num, const Poly& den, std::size_t n, std::int64_t l, int e) {
  Poly out(n, CyclotomicNumber::zero(l, e));
  const CyclotomicNumber inv0 = den[0].inverse();
  for (std::size_t j = 0; j < n; ++j) {
    CyclotomicNumber acc = j < num.size() ? num[j] : CyclotomicNumber::zero(l, e);
    for (std::size_t i = 1; i <= j && i < den.size(); ++i) acc -= den[i] * out[j - i];
    out[j] = acc * inv0;
  }
  return out;
}

// Division by a monic polynomial: a = q * f + r with deg r < deg f.
void divide_monic(Poly a, const Poly& f, Poly& q, Poly& r, std::int64_t l, int e) {
  const std::size_t d = f.size() - 1;
  if (a.size() <= d) {
    q.assign(1, CyclotomicNumber::zero(l, e));
    a.resize(d, CyclotomicNumber::zero(l, e));
    r = std::move(a);
    return;
  }
  q.assign(a.size() - d, CyclotomicNumber::zero(l, e));
  for (std::size_t k = a.size(); k-- > d;) {
    const CyclotomicNumber c = a[k];
    if (c.is_zero()) continue;
    q[k - d] = c;
    for (std::size_t i = 0; i <= d; ++i) a[k - d + i] -= c * f[i];
  }
  a.resize(d);
  r = std::move(a);
}

// Balanced representatives of l-integral coefficients modulo l^c.
CyclotomicNumber reduce_mod(const CyclotomicNumber& x, std::int64_t l, int e, int c) {
  Integer mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(c));
  const Integer half = mod / 2;
  std::vector<Rational> out;
  out.reserve(x.degree());
  for (const auto& q : x.coefficients()) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), mod.get_mpz_t()) == 0) {
      throw DefectError("coefficient left the valuation ring during preparation");
    }
    Integer v = q.get_num() * inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
    if (v > half) v -= mod;
    out.emplace_back(v);
  }
  return CyclotomicNumber::from_coefficients(l, e, std::move(out));
}

std::int64_t min_valuation(const Poly& p) {
  std::int64_t best = -1;
  for (const auto& c : p) {
    auto v = l_valuation(c);
    if (v.is_infinite()) continue;
    if (best < 0 || v.value() < best) best = v.value();
  }
  return best;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::int64_t l, int e, std::size_t precision)
    : l_(l), e_(e), coeffs_(precision, CyclotomicNumber::zero(l, e)) {
  if (precision == 0) throw AlgebraError("series precision must be at least 1");
}

TruncatedSeries TruncatedSeries::from_coefficients(std::int64_t l, int e, std::size_t precision,
                                                   const std::vector<CyclotomicNumber>& coeffs) {
  TruncatedSeries s(l, e, precision);
  for (std::size_t i = 0; i < coeffs.size() && i < precision; ++i) {
    if (coeffs[i].exponent() > e) throw AlgebraError("series coefficient outside Q(zeta_" + std::to_string(ipow(l, e)) + ")");
    if (!ring_integral(coeffs[i], l)) {
      throw AlgebraError("series coefficient " + to_string(coeffs[i]) + " has negative valuation");
    }
    s.coeffs_[i] = at(coeffs[i], l, e);
  }
  return s;
}

TruncatedSeries TruncatedSeries::one(std::int64_t l, int e, std::size_t precision) {
  TruncatedSeries s(l, e, precision);
  s.coeffs_[0] = CyclotomicNumber::one(l, e);
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::int64_t l, int e, std::size_t precision) {
  TruncatedSeries s(l, e, precision);
  if (precision > 1) s.coeffs_[1] = CyclotomicNumber::one(l, e);
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

std::size_t TruncatedSeries::t_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return coeffs_.size();
}

bool TruncatedSeries::is_unit() const { return is_ring_unit(coeffs_[0]); }

TruncatedSeries TruncatedSeries::truncate(std::size_t precision) const {
  TruncatedSeries s(l_, e_, std::min(precision, coeffs_.size()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

TruncatedSeries TruncatedSeries::pow(std::int64_t n) const {
  if (n < 0) throw AlgebraError("negative series power");
  TruncatedSeries acc = one(l_, e_, precision());
  TruncatedSeries base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

namespace {
void check_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.prime() != b.prime() || a.exponent() != b.exponent()) {
    throw AlgebraError("series over different coefficient rings");
  }
}
}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_ring(a, b);
  TruncatedSeries out = a.truncate(b.precision());
  for (std::size_t i = 0; i < out.precision(); ++i) out.coeffs_[i] += b.coeffs_[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_ring(a, b);
  TruncatedSeries out = a.truncate(b.precision());
  for (std::size_t i = 0; i < out.precision(); ++i) out.coeffs_[i] -= b.coeffs_[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_same_ring(a, b);
  TruncatedSeries out(a.l_, a.e_, std::min(a.precision(), b.precision()));
  out.coeffs_ = mul_trunc(a.coeffs_, b.coeffs_, out.precision(), a.l_, a.e_);
  return out;
}

TruncatedSeries operator*(const CyclotomicNumber& c, const TruncatedSeries& a) {
  TruncatedSeries out = a;
  for (auto& x : out.coeffs_) x = at(c * x, a.l_, a.e_);
  for (auto& x : out.coeffs_) {
    if (!ring_integral(x, a.l_)) throw AlgebraError("scalar multiple leaves the valuation ring");
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.l_ == b.l_ && a.e_ == b.e_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries series_arith(const TruncatedSeries& f, const TruncatedSeries& g, SeriesOp op) {
  return op == SeriesOp::add ? f + g : f * g;
}

std::string to_string(const TruncatedSeries& f) {
  std::string out;
  for (std::size_t i = 0; i < f.precision(); ++i) {
    if (f[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = to_string(f[i]);
    const bool compound = c.find_first_of(" ") != std::string::npos;
    if (i == 0) {
      out += c;
    } else {
      if (!f[i].is_one()) out += (compound ? "(" + c + ")" : c) + "*";
      out += i == 1 ? "T" : "T^" + std::to_string(i);
    }
  }
  if (out.empty()) out = "0";
  return out + " + O(T^" + std::to_string(f.precision()) + ")";
}

bool is_distinguished(const std::vector<CyclotomicNumber>& poly) {
  if (poly.empty() || !poly.back().is_one()) return false;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    if (poly[i].is_zero()) continue;
    if (l_valuation(poly[i]).value() <= 0) return false;
  }
  return true;
}

PreparationResult weierstrass_prepare(const TruncatedSeries& f) {
  const std::int64_t l = f.prime();
  const int e = f.exponent();
  const std::size_t M = f.precision();
  if (f.is_zero()) throw AlgebraError("cannot prepare the zero series");

  std::int64_t mu = -1;
  for (const auto& c : f.coefficients()) {
    auto v = l_valuation(c);
    if (!v.is_infinite() && (mu < 0 || v.value() < mu)) mu = v.value();
  }
  const CyclotomicNumber ell = uniformizer(l, e);
  CyclotomicNumber ell_mu_inv = CyclotomicNumber::one(l, e);
  const CyclotomicNumber ell_inv = ell.inverse();
  for (std::int64_t i = 0; i < mu; ++i) ell_mu_inv *= ell_inv;
  Poly fp(M);
  std::size_t lambda = M;
  for (std::size_t i = 0; i < M; ++i) {
    fp[i] = at(f[i] * ell_mu_inv, l, e);
    if (lambda == M && is_ring_unit(fp[i])) lambda = i;
  }
  if (lambda >= M) throw PrecisionError("Weierstrass degree is not visible at precision " + std::to_string(M), static_cast<std::int64_t>(M) + 1);

  const std::size_t s = f.t_order();
  const std::size_t N = M - s;
  const std::size_t lp = lambda - s;
  Poly g(fp.begin() + static_cast<std::ptrdiff_t>(s), fp.end());
  const auto zero = CyclotomicNumber::zero(l, e);

  auto finish = [&](const Poly& F, const Poly& u) {
    Poly dist(s, zero);
    dist.insert(dist.end(), F.begin(), F.end());
    Poly unit = u;
    unit.resize(M, zero);
    return PreparationResult{mu, std::move(dist), TruncatedSeries::from_coefficients(l, e, M, unit)};
  };
  if (lp == 0) return finish(Poly{CyclotomicNumber::one(l, e)}, g);

  Poly F(lp + 1, zero);
  F[lp] = CyclotomicNumber::one(l, e);
  Poly G(N, zero);
  for (std::size_t k = lp; k < N; ++k) G[k - lp] = g[k];
  const Poly G1 = G;
  const Poly t = inverse_trunc(G1, lp, l, e);
  Poly sB;  // (1 - t G1) / T^lp
  {
    Poly tg = mul_trunc(t, G1, N + lp, l, e);
    tg[0] -= CyclotomicNumber::one(l, e);
    sB.assign(N, zero);
    for (std::size_t k = 0; k < N; ++k) sB[k] = -tg[k + lp];
  }
  const int phi = static_cast<int>(phi_prime_power(l, e));
  const int max_steps = 64 + 16 * static_cast<int>(N) * phi;
  for (int step = 0; step < max_steps; ++step) {
    Poly FG = mul_trunc(F, G, N, l, e);
    Poly E(N, zero);
    bool exact = true;
    for (std::size_t k = 0; k < N; ++k) {
      E[k] = g[k] - FG[k];
      exact = exact && E[k].is_zero();
    }
    if (exact) {
      if (!F[0].is_zero()) return finish(F, G);
      throw DefectError("preparation produced a distinguished factor vanishing at 0");
    }
    const std::int64_t vE = min_valuation(E);
    Poly tE = mul_trunc(t, E, N, l, e);
    Poly Q, R;
    divide_monic(std::move(tE), F, Q, R, l, e);
    for (std::size_t k = 0; k < lp; ++k) F[k] += R[k];
    Poly sE = mul_trunc(sB, E, N, l, e);
    Poly QG = mul_trunc(Q, G, N, l, e);
    for (std::size_t k = 0; k < N; ++k) G[k] += sE[k] + QG[k];
    const int c = static_cast<int>((vE + 1 + phi - 1) / phi) + 1;
    for (std::size_t k = 0; k < lp; ++k) F[k] = reduce_mod(F[k], l, e, c);
    for (auto& x : G) x = reduce_mod(x, l, e, c);
    if (F[0].is_zero()) continue;
    Poly u = divide_trunc(g, F, N, l, e);
    bool ok = is_ring_unit(u[0]);
    for (std::size_t k = 0; ok && k < N; ++k) ok = ring_integral(u[k], l);
    if (ok) return finish(F, u);
  }
  throw DefectError("Weierstrass preparation did not converge");
}

TruncatedSeries recompose(const PreparationResult& p, std::size_t precision) {
  const std::int64_t l = p.unit.prime();
  const int e = p.unit.exponent();
  CyclotomicNumber scale = CyclotomicNumber::one(l, e);
  const CyclotomicNumber ell = uniformizer(l, e);
  for (std::int64_t i = 0; i < p.mu; ++i) scale *= ell;
  Poly prod = mul_trunc(p.distinguished, p.unit.coefficients(), precision, l, e);
  for (auto& c : prod) c = at(c * scale, l, e);
  return TruncatedSeries::from_coefficients(l, e, precision, prod);
}

TruncatedSeries series_galois_norm(const TruncatedSeries& f, int e2) {
  const std::int64_t l = f.prime();
  const int e = f.exponent();
  if (e2 > e || e2 < 0) throw AlgebraError("series norm: target exponent out of range");
  if (e2 == e) return f;
  TruncatedSeries prod = TruncatedSeries::one(l, e, f.precision());
  for (std::int64_t k : relative_galois_coset(l, e, e2)) {
    const GaloisElement sigma(l, e, k);
    std::vector<CyclotomicNumber> conj;
    conj.reserve(f.precision());
    for (const auto& c : f.coefficients()) conj.push_back(galois_apply(sigma, c));
    prod = prod * TruncatedSeries::from_coefficients(l, e, f.precision(), conj);
  }
  std::vector<CyclotomicNumber> down;
  down.reserve(prod.precision());
  for (const auto& c : prod.coefficients()) {
    if (!c.lies_in(e2)) throw DefectError("series norm left the target field");
    down.push_back(c.restrict_to(e2));
  }
  return TruncatedSeries::from_coefficients(l, e2, prod.precision(), down);
}

NormOrderCertificate norm_order_certificate(std::int64_t l, int e, int r, int t) {
  if (l < 3 || !is_prime(l)) throw AlgebraError("l must be an odd prime");
  if (e < 0) throw AlgebraError("conductor exponent must be non-negative");
  if (t < 0) throw AlgebraError("t must be non-negative");
  if (e == 0 ? r != 0 : (r < 0 || r > e - 1)) {
    throw AlgebraError("r = " + std::to_string(r) + " is out of range for e = " + std::to_string(e));
  }
  NormOrderCertificate cert;
  cert.l = l;
  cert.e = e;
  cert.r = r;
  cert.t = t;
  const std::int64_t deg = ipow(l, r);
  bool ok = true;
  for (std::int64_t i = 0; i < deg; ++i) {
    CyclotomicNumber tr = rel_trace(CyclotomicNumber::zeta_power(l, e, i), e - r);
    const CyclotomicNumber expect = CyclotomicNumber::from_integer(l, e - r, i == 0 ? deg : 0);
    ok = ok && tr == expect;
    cert.traces.push_back(std::move(tr));
  }
  cert.lattice_verified = ok;
  // O_e = O_{e-r}[zeta], so the traces generate Tr(O_e). A norm (1+T)^{l^t}
  // forces l^t = Tr(f_1/f_0) into that ideal.
  std::int64_t ideal_valuation = -1;
  for (const auto& tr : cert.traces) {
    const Valuation v = l_valuation(tr);
    if (!v.is_infinite() && (ideal_valuation < 0 || v.value() < ideal_valuation)) ideal_valuation = v.value();
  }
  const std::int64_t target = l_valuation(CyclotomicNumber::from_integer(l, e - r, ipow(l, t))).value();
  cert.verdict = target < ideal_valuation ? NormVerdict::obstructed : NormVerdict::representable;
  return cert;
}

UnitReduction unit_reduction_check(const TruncatedSeries& f, int e2, int t) {
  if (!f.is_unit()) throw AlgebraError("unit_reduction_check needs a unit series");
  if (t < 0) throw AlgebraError("t must be non-negative");
  const std::int64_t l = f.prime();
  UnitReduction out;
  out.constant_norm = rel_norm(f[0], e2);
  const CyclotomicNumber ratio = f.precision() > 1 ? f[1] / f[0] : CyclotomicNumber::zero(l, f.exponent());
  out.linear_trace = rel_trace(ratio, e2);
  const std::int64_t lt = ipow(l, t);
  const bool necessary =
      out.constant_norm.is_one() && out.linear_trace == CyclotomicNumber::from_integer(l, e2, lt);
  if (!necessary) {
    out.verdict = UnitVerdict::obstructed;
    return out;
  }
  const std::size_t M = f.precision();
  const TruncatedSeries target = (TruncatedSeries::one(l, e2, M) + TruncatedSeries::variable(l, e2, M)).pow(lt);
  out.verdict = series_galois_norm(f, e2) == target ? UnitVerdict::norm_matches : UnitVerdict::inconclusive;
  return out;
}

std::string to_string(NormVerdict v) { return v == NormVerdict::obstructed ? "obstructed" : "representable"; }

std::string to_string(UnitVerdict v) {
  switch (v) {
    case UnitVerdict::norm_matches: return "norm_matches";
    case UnitVerdict::obstructed: return "obstructed";
    default: return "inconclusive";
  }
}

}  // namespace iwasawa
