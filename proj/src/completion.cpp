#include "iwasawa/completion.hpp"

#include "iwasawa/cyclotomic.hpp"
#include "iwasawa/error.hpp"

namespace iwasawa {

namespace {

std::string local_field(std::int64_t l, int e) {
  std::string base = "Q_" + std::to_string(l);
  return e == 0 ? base : base + "(zeta_" + std::to_string(ipow(l, e)) + ")";
}

}  // namespace

std::string PrimeSpec::label() const {
  switch (kind) {
    case PrimeKind::T: return "T";
    case PrimeKind::ell: return "ell";
    default: break;
  }
  std::string out = "f";
  for (const auto& c : coefficients) out += ":" + to_string(c);
  return out;
}

PrimeSpec parse_prime(std::string_view text) {
  if (text == "T") return {PrimeKind::T, {}};
  if (text == "ell") return {PrimeKind::ell, {}};
  if (text.substr(0, 2) != "f:") throw AlgebraError("unknown prime '" + std::string(text) + "' (expected T, ell or f:c0:...:1)");
  PrimeSpec p{PrimeKind::f, {}};
  std::size_t pos = 2;
  while (pos <= text.size()) {
    std::size_t next = text.find(':', pos);
    if (next == std::string_view::npos) next = text.size();
    p.coefficients.push_back(parse_rational(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  if (p.coefficients.size() < 2) throw AlgebraError("prime f needs degree at least 1");
  return p;
}

CompletionDescriptor completion_descriptor(const ComponentDescriptor& component, const PrimeSpec& prime, std::int64_t l) {
  const int eL = component.center_exponent;
  const std::int64_t degL = phi_prime_power(l, eL);
  const std::string L = local_field(l, eL);
  CompletionDescriptor d;
  d.prime = prime.label();
  d.cd = 3;
  switch (prime.kind) {
    case PrimeKind::T:
      d.completed_center = L + "((T))";
      d.residue_field = L;
      d.residue_degree = degL;
      d.sk1_trivial = "yes";
      break;
    case PrimeKind::f: {
      const auto& c = prime.coefficients;
      if (c.back() != 1) throw AlgebraError("prime " + d.prime + " is not monic");
      for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        auto v = rational_valuation(c[i], l);
        if (v && *v <= 0) throw AlgebraError("prime " + d.prime + " is not distinguished");
      }
      const std::int64_t deg = prime.degree();
      d.residue_degree = degL * deg;
      d.completed_center = "K((t)), [K:Q_" + std::to_string(l) + "] = " + std::to_string(d.residue_degree);
      d.residue_field = "extension of " + L + " of degree " + std::to_string(deg);
      d.sk1_trivial = "yes";
      d.irreducibility = deg == 1 ? "certified" : "assumed";
      break;
    }
    case PrimeKind::ell: {
      d.completed_center = L + "{{T}}";
      d.residue_field = "F_" + std::to_string(l) + "((Tbar))";
      d.residue_degree = 1;
      d.sk1_trivial = "unknown";
      const std::int64_t s = component.schur_index;
      if (s > 1) {
        SkewCompletion sk;
        sk.index = s;
        sk.ramification = s;
        sk.residue_degree = s;
        sk.residue_commutative = true;
        sk.residue_polynomial = "X^" + std::to_string(s) + " - (1+T)";
        const int e = component.invariants.eta_exponent;
        const CyclotomicNumber norm = rel_norm(uniformizer(l, e), eL);
        const CyclotomicNumber nu = norm / uniformizer(l, eL);
        sk.witness_norm = to_string(norm);
        sk.witness_unit = to_string(nu);
        const Valuation v = l_valuation(nu);
        sk.witness_unit_valuation = v.is_infinite() ? -1 : v.value();
        sk.witness_verified = !v.is_infinite() && v.value() == 0 && nu * uniformizer(l, eL) == norm;
        d.skew = sk;
      }
      break;
    }
  }
  return d;
}

}  // namespace iwasawa
