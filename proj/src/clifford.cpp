#include "iwasawa/clifford.hpp"

#include <algorithm>
#include <set>

#include "iwasawa/error.hpp"
#include "iwasawa/rational.hpp"

namespace iwasawa {

Character gamma_act_char(const FiniteLGroup& group, const Character& eta, const GroupAutomorphism& gamma) {
  Character out = eta;
  for (std::size_t c = 0; c < group.class_count(); ++c) {
    out.values[c] = eta.values[group.class_of(gamma(group.classes()[c].representative))];
  }
  return out;
}

Character galois_act_char(const Character& eta, std::int64_t k) {
  Character out = eta;
  if (eta.values.empty()) return out;
  const auto& v0 = eta.values[0];
  if (v0.exponent() == 0) return out;
  const GaloisElement s(v0.prime(), v0.exponent(), k);
  for (auto& v : out.values) v = galois_apply(s, v);
  return out;
}

namespace {

std::vector<std::size_t> galois_orbit_in(const std::vector<Character>& table, const TableIndex& lookup,
                                         std::size_t index) {
  const Character& eta = table[index];
  std::set<std::size_t> out{index};
  if (eta.conductor_exponent > 0) {
    const std::int64_t l = eta.values[0].prime();
    for (std::int64_t k : unit_residues(l, eta.conductor_exponent)) {
      out.insert(lookup.find(galois_act_char(eta, k)));
    }
  }
  return {out.begin(), out.end()};
}

OrbitInvariants orbit_invariants_in(const FiniteLGroup& group, const std::vector<Character>& table,
                                    const TableIndex& lookup, std::size_t eta, const GroupAutomorphism& gamma);

}  // namespace

std::vector<std::size_t> galois_orbit(const std::vector<Character>& table, std::size_t index) {
  return galois_orbit_in(table, TableIndex(table), index);
}

OrbitInvariants orbit_invariants(const FiniteLGroup& group, const std::vector<Character>& table, std::size_t eta,
                                 const GroupAutomorphism& gamma) {
  return orbit_invariants_in(group, table, TableIndex(table), eta, gamma);
}

std::vector<std::int64_t> expected_g0(std::int64_t l, int e, int r) {
  if (e == 0) return {0};
  return relative_galois_coset(l, e, e - r);
}

namespace {

OrbitInvariants orbit_invariants_in(const FiniteLGroup& group, const std::vector<Character>& table,
                                    const TableIndex& lookup, std::size_t eta, const GroupAutomorphism& gamma) {
  const std::int64_t l = group.prime();
  OrbitInvariants inv;
  inv.representative = eta;
  inv.eta_exponent = table[eta].conductor_exponent;
  inv.gamma_orbit.push_back(eta);
  for (std::size_t cur = eta;;) {
    cur = lookup.find(gamma_act_char(group, table[cur], gamma));
    if (cur == eta) break;
    inv.gamma_orbit.push_back(cur);
  }
  inv.w = static_cast<std::int64_t>(inv.gamma_orbit.size());

  const auto gal = galois_orbit_in(table, lookup, eta);
  inv.v = inv.w;
  for (std::int64_t j = 1; j < inv.w; ++j) {
    if (std::binary_search(gal.begin(), gal.end(), inv.gamma_orbit[static_cast<std::size_t>(j)])) {
      inv.v = j;
      break;
    }
  }
  if (inv.w % inv.v != 0) throw DefectError("v does not divide w");
  inv.g0_order = inv.w / inv.v;
  auto r = log_exact(inv.g0_order, l);
  if (!r) throw DefectError("w/v is not a power of l");
  inv.r = *r;
  inv.L_exponent = inv.eta_exponent - inv.r;
  if (inv.L_exponent < 0) throw DefectError("G_0 is larger than the Galois group of Q(eta)");

  const std::int64_t mod = ipow(l, inv.eta_exponent);
  inv.sigma_v = 1 % mod;
  if (inv.v < inv.w) {
    const Character& target = table[inv.gamma_orbit[static_cast<std::size_t>(inv.v)]];
    bool found = false;
    for (std::int64_t k : unit_residues(l, inv.eta_exponent)) {
      if (galois_act_char(table[eta], k) == target) {
        inv.sigma_v = k;
        found = true;
        break;
      }
    }
    if (!found) throw DefectError("no Galois element realizes eta^{gamma^v}");
  }
  std::set<std::int64_t> g0;
  std::int64_t x = 1 % mod;
  do {
    g0.insert(x);
    x = (x * inv.sigma_v) % mod;
  } while (x != 1 % mod);
  inv.g0.assign(g0.begin(), g0.end());
  return inv;
}

}  // namespace

std::vector<ComponentDescriptor> decompose(const FiniteLGroup& group, const GroupAutomorphism& gamma,
                                           const std::vector<Character>& table) {
  const std::int64_t l = group.prime();
  const TableIndex lookup(table);
  std::vector<char> assigned(table.size(), 0);
  std::vector<ComponentDescriptor> out;
  for (std::size_t eta = 0; eta < table.size(); ++eta) {
    if (assigned[eta]) continue;
    ComponentDescriptor d;
    d.invariants = orbit_invariants_in(group, table, lookup, eta, gamma);
    const auto& inv = d.invariants;
    std::set<std::size_t> orbit;
    for (std::size_t idx : inv.gamma_orbit) {
      for (std::size_t g : galois_orbit_in(table, lookup, idx)) orbit.insert(g);
    }
    d.orbit.assign(orbit.begin(), orbit.end());
    for (std::size_t idx : d.orbit) assigned[idx] = 1;
    d.m = gamma.m();
    d.eta_degree = table[eta].degree;
    d.chi_degree = inv.w * d.eta_degree;
    d.schur_index = inv.g0_order;
    d.matrix_size = d.chi_degree / d.schur_index;
    d.center_exponent = inv.L_exponent;
    d.center_power = inv.w;
    if (d.schur_index > 1) {
      d.skew_field = CyclicPresentation{inv.eta_exponent, inv.L_exponent, inv.sigma_v, inv.w};
    }
    d.dimension = ipow(l, d.m) * inv.v * d.eta_degree * d.eta_degree * phi_prime_power(l, inv.eta_exponent);
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace iwasawa
