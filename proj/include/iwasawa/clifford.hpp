#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iwasawa/character_table.hpp"
#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/finite_group.hpp"

namespace iwasawa {

/// eta^gamma(c) = eta(class of gamma(rep c)).
Character gamma_act_char(const FiniteLGroup& group, const Character& eta, const GroupAutomorphism& gamma);

/// eta^sigma: sigma applied to every value (sigma taken modulo l^E, E = exponent of the values).
Character galois_act_char(const Character& eta, std::int64_t k);

/// Table indices of the Galois orbit of table[index], sorted.
std::vector<std::size_t> galois_orbit(const std::vector<Character>& table, std::size_t index);

struct OrbitInvariants {
  std::size_t representative = 0;           // table index of eta
  std::int64_t w = 1;                        // gamma-orbit length
  std::int64_t v = 1;                        // least j >= 1 with eta^{gamma^j} Galois conjugate to eta
  std::int64_t g0_order = 1;                 // w / v = l^r
  int r = 0;
  int eta_exponent = 0;                      // e_eta
  int L_exponent = 0;                        // e_eta - r
  std::int64_t sigma_v = 1;                  // exponent k modulo l^{e_eta}; 1 when v = w
  std::vector<std::int64_t> g0;              // <sigma_v> as residues modulo l^{e_eta}, sorted
  std::vector<std::size_t> gamma_orbit;      // table indices of eta^{gamma^j}, j = 0..w-1
  friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};

/// Residues k mod l^{e} with k = 1 mod l^{e - r}: the order-l^r subgroup of (Z/l^e)^x.
std::vector<std::int64_t> expected_g0(std::int64_t l, int e, int r);

OrbitInvariants orbit_invariants(const FiniteLGroup& group, const std::vector<Character>& table, std::size_t eta,
                                 const GroupAutomorphism& gamma);

/// Cyclic algebra (Q(zeta_{l^{e_eta}}) Gamma^w / Q(zeta_{l^{e_eta - r}}) Gamma^w, sigma_v, gamma^w).
struct CyclicPresentation {
  int maximal_subfield_exponent = 0;
  int center_exponent = 0;
  std::int64_t sigma_k = 1;
  std::int64_t gamma_power = 1;
  friend bool operator==(const CyclicPresentation&, const CyclicPresentation&) = default;
};

struct ComponentDescriptor {
  std::vector<std::size_t> orbit;            // combined <gamma> x Gal orbit, sorted table indices
  OrbitInvariants invariants;
  int m = 0;                                 // l^m = order of gamma on H
  std::int64_t eta_degree = 1;
  std::int64_t chi_degree = 1;               // w * eta(1)
  std::int64_t schur_index = 1;              // w / v
  std::int64_t matrix_size = 1;              // chi_degree / schur_index
  int center_exponent = 0;                   // L = Q(zeta_{l^{e_eta - r}})
  std::int64_t center_power = 1;             // Q^L Gamma^{w}
  std::optional<CyclicPresentation> skew_field;  // empty when split
  std::int64_t dimension = 1;                // over Q Gamma_0: l^m v eta(1)^2 phi(l^{e_eta})
  friend bool operator==(const ComponentDescriptor&, const ComponentDescriptor&) = default;
};

/// One descriptor per combined orbit, ordered by least table index.
std::vector<ComponentDescriptor> decompose(const FiniteLGroup& group, const GroupAutomorphism& gamma,
                                           const std::vector<Character>& table);

}  // namespace iwasawa
