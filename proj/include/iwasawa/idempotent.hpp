#pragma once

#include <map>
#include <vector>

#include "iwasawa/character_table.hpp"
#include "iwasawa/clifford.hpp"
#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/finite_group.hpp"

namespace iwasawa {

/// Element of K[H] for K = Q(zeta_{l^e}). Absent keys are zero; zero entries are never stored.
class GroupAlgebraElement {
 public:
  using Element = FiniteLGroup::Element;

  explicit GroupAlgebraElement(const FiniteLGroup& group) : group_(&group) {}
  static GroupAlgebraElement identity(const FiniteLGroup& group);
  static GroupAlgebraElement basis(const FiniteLGroup& group, Element h);

  const FiniteLGroup& group() const noexcept { return *group_; }
  const std::map<Element, CyclotomicNumber>& coefficients() const noexcept { return coeffs_; }
  CyclotomicNumber coefficient(Element h) const;
  void add_term(Element h, const CyclotomicNumber& c);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_rational() const;
  /// Commutes with every basis element.
  bool is_central() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator*=(const Rational& q);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Rational& q) { return a *= q; }
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  void check_group(const GroupAlgebraElement& other) const;

  const FiniteLGroup* group_;
  std::map<Element, CyclotomicNumber> coeffs_;
};

/// Convolution product along the multiplication table.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y);

/// e(eta) = (eta(1)/|H|) sum_h eta(h^{-1}) h.
GroupAlgebraElement e_idem(const FiniteLGroup& group, const Character& eta);

/// epsilon(eta): sum of e over the Galois orbit of eta.
GroupAlgebraElement eps_idem(const FiniteLGroup& group, const std::vector<Character>& table, std::size_t eta);

/// x^{gamma^j}: coefficient of h is the coefficient of gamma^j(h) in x.
GroupAlgebraElement gamma_conjugate(const GroupAlgebraElement& x, const GroupAutomorphism& gamma, std::int64_t j);

/// sum_{j<v} epsilon(eta^{gamma^j}) for the component's representative eta.
GroupAlgebraElement component_idempotent(const FiniteLGroup& group, const std::vector<Character>& table,
                                         const ComponentDescriptor& component);

/// e_chi = sum_{j<w} e(eta^{gamma^j}).
GroupAlgebraElement e_chi(const FiniteLGroup& group, const std::vector<Character>& table,
                          const ComponentDescriptor& component);

}  // namespace iwasawa
