#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/finite_group.hpp"

namespace iwasawa {

/// Irreducible character of H. Values are indexed by conjugacy class and are
/// expressed in Q(zeta_{exp(H)}); conductor_exponent is e_eta of Q(eta).
struct Character {
  std::int64_t degree = 1;
  std::vector<CyclotomicNumber> values;
  int conductor_exponent = 0;

  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// a_{ijk} = #{(x, y) in C_i x C_j : xy = rep(C_k)}.
class ClassMultCoefficients {
 public:
  explicit ClassMultCoefficients(std::size_t r) : r_(r), data_(r * r * r, 0) {}
  std::size_t rank() const noexcept { return r_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * r_ + j) * r_ + k]; }
  std::int64_t& at(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * r_ + j) * r_ + k]; }

 private:
  std::size_t r_;
  std::vector<std::int64_t> data_;
};

ClassMultCoefficients class_mult_coefficients(const FiniteLGroup& group);

/// Full table of Irr(H), sorted by degree and then by values (descending), so
/// the trivial character always comes first.
std::vector<Character> character_table(const FiniteLGroup& group);

/// Class containing the inverses of the elements of class c.
std::size_t inverse_class(const FiniteLGroup& group, std::size_t c);

/// Accumulates sum_t w_t x_t conj(y_t) in Q(zeta_{l^e}) before a single reduction.
class HermitianAccumulator {
 public:
  HermitianAccumulator(std::int64_t l, int e);
  void add(const CyclotomicNumber& x, const CyclotomicNumber& y, const Rational& weight);
  CyclotomicNumber result() const;

 private:
  std::int64_t l_;
  int e_;
  std::vector<Rational> buf_;
};

/// <a, b> = (1/|H|) sum_c |C_c| a(c) conj(b(c)).
CyclotomicNumber inner_product(const FiniteLGroup& group, const Character& a, const Character& b);

/// Sorts into the canonical table order.
void sort_table(std::vector<Character>& table);

/// Index of chi in the table; throws DefectError when absent.
std::size_t find_character(const std::vector<Character>& table, const Character& chi);

/// Value-keyed lookup into a table.
class TableIndex {
 public:
  explicit TableIndex(const std::vector<Character>& table);
  /// Throws DefectError when chi is not in the table.
  std::size_t find(const Character& chi) const;

 private:
  std::map<std::vector<CyclotomicNumber>, std::size_t> index_;
};

namespace detail {

/// Character group of an abelian H built by extending along a subgroup chain.
std::vector<Character> abelian_table(const FiniteLGroup& group);
/// Class-algebra eigenvectors over F_p, lifted to exact values.
std::vector<Character> burnside_table(const FiniteLGroup& group);
/// Least prime p = 1 mod exp(H) with p > 2|H|.
std::int64_t lifting_prime(const FiniteLGroup& group);

}  // namespace detail

}  // namespace iwasawa
