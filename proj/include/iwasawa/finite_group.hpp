#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace iwasawa {

/// Abelian l-group Z/n1 x ... x Z/nk; every ni must be a power of l.
struct AbelianSpec {
  std::vector<std::int64_t> invariants;
  friend bool operator==(const AbelianSpec&, const AbelianSpec&) = default;
};

/// Explicit Cayley table, rows[x][y] = x*y.
struct TableSpec {
  std::vector<std::vector<std::uint32_t>> rows;
  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

/// Named group. Supported: "heisenberg_<l>" (extraspecial of order l^3, exponent l).
struct PresetSpec {
  std::string name;
  friend bool operator==(const PresetSpec&, const PresetSpec&) = default;
};

using GroupSpec = std::variant<AbelianSpec, TableSpec, PresetSpec>;

inline constexpr std::size_t kDefaultOrderCap = 729;

struct ConjugacyClass {
  std::uint32_t representative;  // least element index in the class
  std::vector<std::uint32_t> members;
};

/// Finite l-group given by a dense multiplication table over indices 0..n-1.
/// Immutable once built; construction verifies the group axioms.
class FiniteLGroup {
 public:
  using Element = std::uint32_t;

  std::int64_t prime() const noexcept { return l_; }
  std::size_t order() const noexcept { return n_; }
  /// exp(H) = l^E.
  std::int64_t exponent() const noexcept { return exponent_; }
  int exponent_log() const noexcept { return exponent_log_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element x, Element y) const { return table_[static_cast<std::size_t>(x) * n_ + y]; }
  Element inverse(Element x) const { return inverse_[x]; }
  Element power(Element x, std::int64_t k) const;
  std::int64_t element_order(Element x) const;

  /// Named generators g1, g2, ... (index i holds g_{i+1}).
  const std::vector<Element>& generators() const noexcept { return generators_; }

  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<ConjugacyClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(Element x) const { return class_of_[x]; }
  bool is_abelian() const noexcept { return classes_.size() == n_; }
  std::vector<Element> center() const;

  const std::string& description() const noexcept { return description_; }

 private:
  friend FiniteLGroup build_group(std::int64_t l, const GroupSpec& spec, std::size_t order_cap);
  FiniteLGroup() = default;
  void finalize();  // verifies axioms, computes classes and exponent

  std::int64_t l_ = 0;
  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<Element> generators_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::int64_t exponent_ = 1;
  int exponent_log_ = 0;
  std::string description_;
};

/// Builds and verifies H. Throws GroupError for bad input or orders above the cap.
FiniteLGroup build_group(std::int64_t l, const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

/// Conjugacy classes ordered by least representative.
const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteLGroup& group);

/// Evaluates a word such as "g1^4", "g1*g2^-1" or "1" in the named generators.
FiniteLGroup::Element evaluate_word(const FiniteLGroup& group, std::string_view word);

/// The automorphism of H induced by conjugation with gamma; its order is l^m.
class GroupAutomorphism {
 public:
  using Element = FiniteLGroup::Element;

  Element operator()(Element x) const { return perm_[x]; }
  const std::vector<Element>& permutation() const noexcept { return perm_; }
  std::int64_t order() const noexcept { return order_; }
  /// l^m = order().
  int m() const noexcept { return m_; }
  bool is_identity() const noexcept { return order_ == 1; }
  /// gamma^j for any integer j.
  GroupAutomorphism power(std::int64_t j) const;
  /// Induced permutation of the conjugacy classes of the group it was built for.
  std::vector<std::size_t> class_permutation(const FiniteLGroup& group) const;

  friend bool operator==(const GroupAutomorphism& a, const GroupAutomorphism& b) { return a.perm_ == b.perm_; }

 private:
  friend GroupAutomorphism automorphism_from_permutation(const FiniteLGroup&, std::vector<FiniteLGroup::Element>);
  GroupAutomorphism(std::vector<Element> perm, std::int64_t order, int m, std::int64_t l)
      : perm_(std::move(perm)), order_(order), m_(m), l_(l) {}

  std::vector<Element> perm_;
  std::int64_t order_;
  int m_;
  std::int64_t l_;
};

/// Extends generator images (generator index -> element) to an automorphism.
/// Generators without an entry are fixed. Throws GroupError when the images do
/// not define an automorphism or its order is not a power of l.
GroupAutomorphism build_automorphism(const FiniteLGroup& group,
                                     const std::map<std::size_t, FiniteLGroup::Element>& images);

/// Verifies an explicit permutation is an automorphism of l-power order.
GroupAutomorphism automorphism_from_permutation(const FiniteLGroup& group, std::vector<FiniteLGroup::Element> perm);

}  // namespace iwasawa
