#include "iwasawa/idempotent.hpp"

#include <algorithm>

#include "iwasawa/error.hpp"

namespace iwasawa {

GroupAlgebraElement GroupAlgebraElement::identity(const FiniteLGroup& group) {
  return basis(group, group.identity());
}

GroupAlgebraElement GroupAlgebraElement::basis(const FiniteLGroup& group, Element h) {
  GroupAlgebraElement x(group);
  x.coeffs_.emplace(h, CyclotomicNumber::one(group.prime(), 0));
  return x;
}

CyclotomicNumber GroupAlgebraElement::coefficient(Element h) const {
  auto it = coeffs_.find(h);
  return it == coeffs_.end() ? CyclotomicNumber::zero(group_->prime(), 0) : it->second;
}

void GroupAlgebraElement::add_term(Element h, const CyclotomicNumber& c) {
  if (h >= group_->order()) throw AlgebraError("group element index out of range");
  auto it = coeffs_.find(h);
  if (it == coeffs_.end()) {
    if (!c.is_zero()) coeffs_.emplace(h, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

bool GroupAlgebraElement::is_rational() const {
  for (const auto& [h, c] : coeffs_) {
    if (!c.is_rational()) return false;
  }
  return true;
}

bool GroupAlgebraElement::is_central() const {
  for (Element g : group_->generators()) {
    auto b = basis(*group_, g);
    if (!(ga_mul(b, *this) == ga_mul(*this, b))) return false;
  }
  return true;
}

void GroupAlgebraElement::check_group(const GroupAlgebraElement& other) const {
  if (group_ != other.group_) throw AlgebraError("group algebra elements of different groups");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& rhs) {
  check_group(rhs);
  for (const auto& [h, c] : rhs.coeffs_) add_term(h, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& rhs) {
  check_group(rhs);
  for (const auto& [h, c] : rhs.coeffs_) add_term(h, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(const Rational& q) {
  if (q == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [h, c] : coeffs_) c *= q;
  return *this;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& x, const GroupAlgebraElement& y) {
  if (&x.group() != &y.group()) throw AlgebraError("group algebra elements of different groups");
  const auto& group = x.group();
  const std::int64_t l = group.prime();
  int e = 0;
  for (const auto& [g, a] : x.coefficients()) e = std::max(e, a.exponent());
  for (const auto& [h, b] : y.coefficients()) e = std::max(e, b.exponent());
  const auto n = static_cast<std::size_t>(ipow(l, e));
  // Products are accumulated on exponents of zeta_{l^e} and reduced once per group element.
  auto spread = [&](const CyclotomicNumber& c) {
    std::vector<std::pair<std::size_t, Rational>> out;
    const auto step = static_cast<std::size_t>(ipow(l, e - c.exponent()));
    const auto coeffs = c.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] != 0) out.emplace_back(i * step, coeffs[i]);
    }
    return out;
  };
  using Element = GroupAlgebraElement::Element;
  std::vector<std::pair<Element, std::vector<std::pair<std::size_t, Rational>>>> xs, ys;
  for (const auto& [g, a] : x.coefficients()) xs.emplace_back(g, spread(a));
  for (const auto& [h, b] : y.coefficients()) ys.emplace_back(h, spread(b));
  std::map<Element, std::vector<Rational>> acc;
  for (const auto& [g, as] : xs) {
    for (const auto& [h, bs] : ys) {
      auto& buf = acc[group.mul(g, h)];
      if (buf.empty()) buf.assign(n, Rational(0));
      for (const auto& [i, a] : as) {
        for (const auto& [j, b] : bs) buf[(i + j) % n] += a * b;
      }
    }
  }
  GroupAlgebraElement out(group);
  for (auto& [k, buf] : acc) out.add_term(k, reduce_cyclic(l, e, std::move(buf)));
  return out;
}

GroupAlgebraElement e_idem(const FiniteLGroup& group, const Character& eta) {
  GroupAlgebraElement out(group);
  const Rational scale = make_rational(eta.degree, static_cast<std::int64_t>(group.order()));
  for (std::size_t h = 0; h < group.order(); ++h) {
    const auto x = static_cast<FiniteLGroup::Element>(h);
    out.add_term(x, eta.values[group.class_of(group.inverse(x))] * scale);
  }
  return out;
}

GroupAlgebraElement eps_idem(const FiniteLGroup& group, const std::vector<Character>& table, std::size_t eta) {
  GroupAlgebraElement out(group);
  for (std::size_t idx : galois_orbit(table, eta)) out += e_idem(group, table[idx]);
  return out;
}

GroupAlgebraElement gamma_conjugate(const GroupAlgebraElement& x, const GroupAutomorphism& gamma, std::int64_t j) {
  const auto& group = x.group();
  const auto back = gamma.power(-j);
  GroupAlgebraElement out(group);
  for (const auto& [h, c] : x.coefficients()) out.add_term(back(h), c);
  return out;
}

GroupAlgebraElement component_idempotent(const FiniteLGroup& group, const std::vector<Character>& table,
                                         const ComponentDescriptor& component) {
  const auto& inv = component.invariants;
  GroupAlgebraElement out(group);
  for (std::int64_t j = 0; j < inv.v; ++j) out += eps_idem(group, table, inv.gamma_orbit[static_cast<std::size_t>(j)]);
  return out;
}

GroupAlgebraElement e_chi(const FiniteLGroup& group, const std::vector<Character>& table,
                          const ComponentDescriptor& component) {
  GroupAlgebraElement out(group);
  for (std::size_t idx : component.invariants.gamma_orbit) out += e_idem(group, table[idx]);
  return out;
}

}  // namespace iwasawa
