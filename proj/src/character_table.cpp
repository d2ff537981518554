#include "iwasawa/character_table.hpp"

#include <algorithm>
#include <optional>

#include "iwasawa/error.hpp"
#include "iwasawa/rational.hpp"

namespace iwasawa {

namespace {

using Element = FiniteLGroup::Element;
using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) { return static_cast<std::int64_t>((__int128)a * b % p); }

std::int64_t powmod(std::int64_t a, std::int64_t k, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod_floor(a, p);
  while (k > 0) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

std::int64_t least_primitive_root(std::int64_t p) {
  std::vector<std::int64_t> factors;
  std::int64_t m = p - 1;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (std::int64_t g = 2;; ++g) {
    bool ok = true;
    for (std::int64_t q : factors) ok = ok && powmod(g, (p - 1) / q, p) != 1;
    if (ok) return g;
  }
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& a, std::int64_t p) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::int64_t inv = invmod(a[r][c], p);
    for (auto& v : a[r]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      std::int64_t f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = mod_floor(a[i][j] - mulmod(f, a[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

Mat nullspace(Mat a, std::int64_t p) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a, p);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = mod_floor(-a[i][f], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (low degree first) via Hessenberg reduction.
Vec charpoly(Mat h, std::int64_t p) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && h[piv][m - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (auto& row : h) std::swap(row[piv], row[m]);
    }
    std::int64_t inv = invmod(h[m][m - 1], p);
    for (std::size_t i = m + 1; i < n; ++i) {
      std::int64_t u = mulmod(h[i][m - 1], inv, p);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h[i][j] = mod_floor(h[i][j] - mulmod(u, h[m][j], p), p);
      for (std::size_t j = 0; j < n; ++j) h[j][m] = (h[j][m] + mulmod(u, h[j][i], p)) % p;
    }
  }
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t k = 0; k < n; ++k) {
    Vec next(k + 2, 0);
    const Vec& pk = polys[k];
    for (std::size_t d = 0; d < pk.size(); ++d) {
      next[d + 1] = (next[d + 1] + pk[d]) % p;
      next[d] = mod_floor(next[d] - mulmod(h[k][k], pk[d], p), p);
    }
    std::int64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], p);
      std::int64_t coef = mulmod(h[i][k], prod, p);
      if (coef == 0) continue;
      for (std::size_t d = 0; d < polys[i].size(); ++d) next[d] = mod_floor(next[d] - mulmod(coef, polys[i][d], p), p);
    }
    polys.push_back(std::move(next));
  }
  return polys.back();
}

Vec roots_mod_p(const Vec& poly, std::int64_t p) {
  Vec out;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = (mulmod(acc, x, p) + poly[d]) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

std::int64_t lex_sign(const Character& a, const Character& b) {
  for (std::size_t c = 0; c < a.values.size(); ++c) {
    auto cmp = a.values[c] <=> b.values[c];
    if (cmp != 0) return cmp < 0 ? -1 : 1;
  }
  return 0;
}

Character finish(const FiniteLGroup& group, std::vector<CyclotomicNumber> values) {
  Character chi;
  chi.values = std::move(values);
  chi.degree = chi.values[0].rational_part().get_num().get_si();
  chi.conductor_exponent = value_field_conductor(chi.values);
  (void)group;
  return chi;
}

}  // namespace

ClassMultCoefficients class_mult_coefficients(const FiniteLGroup& group) {
  const std::size_t r = group.class_count();
  ClassMultCoefficients a(r);
  for (std::size_t k = 0; k < r; ++k) {
    Element z = group.classes()[k].representative;
    for (std::size_t x = 0; x < group.order(); ++x) {
      Element y = group.mul(group.inverse(static_cast<Element>(x)), z);
      a.at(group.class_of(static_cast<Element>(x)), group.class_of(y), k) += 1;
    }
  }
  return a;
}

std::size_t inverse_class(const FiniteLGroup& group, std::size_t c) {
  return group.class_of(group.inverse(group.classes()[c].representative));
}

HermitianAccumulator::HermitianAccumulator(std::int64_t l, int e)
    : l_(l), e_(e), buf_(static_cast<std::size_t>(ipow(l, e)), Rational(0)) {}

void HermitianAccumulator::add(const CyclotomicNumber& x, const CyclotomicNumber& y, const Rational& weight) {
  std::optional<CyclotomicNumber> xl, yl;
  if (x.exponent() != e_) xl = x.lift_to(e_);
  if (y.exponent() != e_) yl = y.lift_to(e_);
  const auto n = static_cast<std::int64_t>(buf_.size());
  const auto xc = xl ? xl->coefficients() : x.coefficients();
  const auto yc = yl ? yl->coefficients() : y.coefficients();
  for (std::size_t i = 0; i < xc.size(); ++i) {
    if (xc[i] == 0) continue;
    const Rational xw = xc[i] * weight;
    for (std::size_t j = 0; j < yc.size(); ++j) {
      if (yc[j] == 0) continue;
      buf_[static_cast<std::size_t>(mod_floor(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), n))] += xw * yc[j];
    }
  }
}

CyclotomicNumber HermitianAccumulator::result() const {
  std::vector<Rational> copy = buf_;
  return reduce_cyclic(l_, e_, std::move(copy));
}

CyclotomicNumber inner_product(const FiniteLGroup& group, const Character& a, const Character& b) {
  HermitianAccumulator acc(group.prime(), group.exponent_log());
  for (std::size_t c = 0; c < group.class_count(); ++c) {
    acc.add(a.values[c], b.values[c], Rational(static_cast<long>(group.classes()[c].members.size())));
  }
  return acc.result() * Rational(1, static_cast<unsigned long>(group.order()));
}

void sort_table(std::vector<Character>& table) {
  std::sort(table.begin(), table.end(), [](const Character& a, const Character& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return lex_sign(a, b) > 0;
  });
}

std::size_t find_character(const std::vector<Character>& table, const Character& chi) {
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == chi) return i;
  }
  throw DefectError("class function is not an irreducible character of the table");
}

TableIndex::TableIndex(const std::vector<Character>& table) {
  for (std::size_t i = 0; i < table.size(); ++i) index_.emplace(table[i].values, i);
}

std::size_t TableIndex::find(const Character& chi) const {
  auto it = index_.find(chi.values);
  if (it == index_.end()) throw DefectError("class function is not an irreducible character of the table");
  return it->second;
}

namespace detail {

std::int64_t lifting_prime(const FiniteLGroup& group) {
  const std::int64_t ex = group.exponent();
  const std::int64_t bound = 2 * static_cast<std::int64_t>(group.order());
  for (std::int64_t p = ex + 1;; p += ex) {
    if (p > bound && is_prime(p)) return p;
  }
}

std::vector<Character> abelian_table(const FiniteLGroup& group) {
  if (!group.is_abelian()) throw AlgebraError("abelian_table needs an abelian group");
  const std::size_t n = group.order();
  const std::int64_t ex = group.exponent();
  const std::int64_t l = group.prime();
  const int e = group.exponent_log();
  constexpr std::int64_t kOut = -1;
  // chars[t][x]: exponent a with chi_t(x) = zeta_E^a, kOut outside the current subgroup.
  std::vector<Vec> chars{Vec(n, kOut)};
  chars[0][group.identity()] = 0;
  std::vector<Element> sub{group.identity()};
  std::vector<char> in_sub(n, 0);
  in_sub[group.identity()] = 1;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (in_sub[cand]) continue;
    const Element g = static_cast<Element>(cand);
    std::int64_t q = 1;
    Element gq = g;
    while (!in_sub[gq]) {
      gq = group.mul(gq, g);
      ++q;
    }
    std::vector<Element> grown;
    grown.reserve(sub.size() * static_cast<std::size_t>(q));
    for (std::int64_t j = 0; j < q; ++j) {
      Element gj = group.power(g, j);
      for (Element h : sub) grown.push_back(group.mul(h, gj));
    }
    std::vector<Vec> next;
    next.reserve(chars.size() * static_cast<std::size_t>(q));
    for (const auto& chi : chars) {
      std::int64_t b = chi[gq];
      if (b % q != 0) throw DefectError("character does not extend along the subgroup chain");
      for (std::int64_t t = 0; t < q; ++t) {
        std::int64_t a = b / q + t * (ex / q);
        Vec ext(n, kOut);
        for (std::int64_t j = 0; j < q; ++j) {
          Element gj = group.power(g, j);
          for (Element h : sub) ext[group.mul(h, gj)] = mod_floor(chi[h] + j * a, ex);
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    sub = std::move(grown);
    for (Element h : sub) in_sub[h] = 1;
  }
  std::vector<Character> table;
  table.reserve(chars.size());
  for (const auto& chi : chars) {
    std::vector<CyclotomicNumber> values;
    values.reserve(group.class_count());
    for (const auto& cls : group.classes()) values.push_back(CyclotomicNumber::zeta_power(l, e, chi[cls.representative]));
    table.push_back(finish(group, std::move(values)));
  }
  sort_table(table);
  return table;
}

std::vector<Character> burnside_table(const FiniteLGroup& group) {
  const std::size_t r = group.class_count();
  const std::size_t n = group.order();
  const std::int64_t l = group.prime();
  const int e = group.exponent_log();
  const std::int64_t ex = group.exponent();
  const std::int64_t p = lifting_prime(group);
  const std::int64_t z = powmod(least_primitive_root(p), (p - 1) / ex, p);
  const auto a = class_mult_coefficients(group);

  // Each subspace is stored as RREF rows in F_p^r.
  std::vector<Mat> spaces;
  {
    Mat full(r, Vec(r, 0));
    for (std::size_t i = 0; i < r; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t i = 1; i < r; ++i) {
    std::vector<Mat> refined;
    for (auto& basis : spaces) {
      const std::size_t d = basis.size();
      if (d == 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      std::vector<std::size_t> piv(d);
      for (std::size_t s = 0; s < d; ++s) {
        piv[s] = 0;
        while (basis[s][piv[s]] == 0) ++piv[s];
      }
      Mat restricted(d, Vec(d, 0));
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t s = 0; s < d; ++s) {
          std::int64_t acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = (acc + mulmod(a(i, piv[s], k) % p, basis[t][k], p)) % p;
          restricted[s][t] = acc;
        }
      }
      Vec poly = charpoly(restricted, p);
      Vec roots = roots_mod_p(poly, p);
      std::size_t covered = 0;
      for (std::int64_t lambda : roots) {
        Mat shifted = restricted;
        for (std::size_t s = 0; s < d; ++s) shifted[s][s] = mod_floor(shifted[s][s] - lambda, p);
        Mat coords = nullspace(shifted, p);
        Mat sub;
        for (const auto& v : coords) {
          Vec w(r, 0);
          for (std::size_t t = 0; t < d; ++t) {
            if (v[t] == 0) continue;
            for (std::size_t k = 0; k < r; ++k) w[k] = (w[k] + mulmod(v[t], basis[t][k], p)) % p;
          }
          sub.push_back(std::move(w));
        }
        rref(sub, p);
        covered += sub.size();
        refined.push_back(std::move(sub));
      }
      if (covered != d) throw DefectError("class algebra matrix is not diagonalizable over F_p");
    }
    spaces = std::move(refined);
  }

  std::vector<std::int64_t> size_inv(r);
  for (std::size_t k = 0; k < r; ++k) size_inv[k] = invmod(static_cast<std::int64_t>(group.classes()[k].members.size()) % p, p);
  std::vector<std::size_t> inv_cls(r);
  for (std::size_t k = 0; k < r; ++k) inv_cls[k] = inverse_class(group, k);

  std::vector<Character> table;
  for (auto& basis : spaces) {
    if (basis.size() != 1) throw DefectError("class algebra did not split into one-dimensional eigenspaces");
    Vec omega = basis[0];
    if (omega[0] == 0) throw DefectError("central character vanishes at the identity class");
    std::int64_t norm = invmod(omega[0], p);
    for (auto& v : omega) v = mulmod(v, norm, p);
    std::int64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) s = (s + mulmod(mulmod(omega[k], omega[inv_cls[k]], p), size_inv[k], p)) % p;
    const std::int64_t d2 = mulmod(static_cast<std::int64_t>(n) % p, invmod(s, p), p);
    std::int64_t degree = 0;
    for (std::int64_t d = 1; d * d <= static_cast<std::int64_t>(n); d *= l) {
      if ((d * d) % p == d2) degree = d;
    }
    if (degree == 0) throw DefectError("no l-power degree matches the central character");
    Vec chi_mod(r);
    for (std::size_t k = 0; k < r; ++k) chi_mod[k] = mulmod(mulmod(degree, omega[k], p), size_inv[k], p);

    std::vector<CyclotomicNumber> values;
    values.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      const Element g = group.classes()[k].representative;
      const std::int64_t o = group.element_order(g);
      const std::int64_t zo = powmod(z, ex / o, p);
      const std::int64_t o_inv = invmod(o % p, p);
      Vec along(static_cast<std::size_t>(o));
      for (std::int64_t j = 0; j < o; ++j) along[static_cast<std::size_t>(j)] = chi_mod[group.class_of(group.power(g, j))];
      CyclotomicNumber value = CyclotomicNumber::zero(l, e);
      std::int64_t total = 0;
      for (std::int64_t t = 0; t < o; ++t) {
        std::int64_t acc = 0;
        const std::int64_t step = powmod(zo, o - t, p);
        std::int64_t w = 1;
        for (std::int64_t j = 0; j < o; ++j) {
          acc = (acc + mulmod(along[static_cast<std::size_t>(j)], w, p)) % p;
          w = mulmod(w, step, p);
        }
        const std::int64_t mult = mulmod(acc, o_inv, p);
        if (mult > degree) throw DefectError("eigenvalue multiplicity exceeds the degree");
        total += mult;
        if (mult != 0) value += CyclotomicNumber::zeta_power(l, e, t * (ex / o)) * Rational(static_cast<long>(mult));
      }
      if (total != degree) throw DefectError("eigenvalue multiplicities do not sum to the degree");
      values.push_back(std::move(value));
    }
    table.push_back(finish(group, std::move(values)));
  }
  sort_table(table);
  return table;
}

}  // namespace detail

std::vector<Character> character_table(const FiniteLGroup& group) {
  return group.is_abelian() ? detail::abelian_table(group) : detail::burnside_table(group);
}

}  // namespace iwasawa
