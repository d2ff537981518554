#include "iwasawa/run.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <set>

#include "iwasawa/completion.hpp"
#include "iwasawa/error.hpp"
#include "iwasawa/idempotent.hpp"
#include "iwasawa/series.hpp"

namespace iwasawa {

namespace {

using Witness = std::optional<std::string>;

SuiteResult run_suite(std::string name, const std::function<Witness()>& body) {
  SuiteResult res{std::move(name), SuiteStatus::pass, {}};
  try {
    if (auto w = body()) {
      res.status = SuiteStatus::fail;
      res.witness = *w;
    }
  } catch (const std::exception& err) {
    res.status = SuiteStatus::fail;
    res.witness = std::string("exception: ") + err.what();
  }
  return res;
}

SuiteResult skipped(std::string name, std::string reason) {
  return {std::move(name), SuiteStatus::skipped, std::move(reason)};
}

std::string str(std::size_t x) { return std::to_string(x); }

Witness group_suite(const FiniteLGroup& g) {
  std::size_t total = 0;
  std::size_t central = 0;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const std::size_t size = g.classes()[c].members.size();
    if (g.order() % size != 0) return "class " + str(c) + " has size " + str(size) + " not dividing |H|";
    total += size;
    if (size == 1) ++central;
  }
  if (total != g.order()) return "class sizes sum to " + str(total);
  if (central != g.center().size()) return "central classes " + str(central) + " vs |Z(H)| " + str(g.center().size());
  return std::nullopt;
}

Witness gamma_suite(const FiniteLGroup& g, const GroupAutomorphism& gamma) {
  for (FiniteLGroup::Element x = 0; x < g.order(); ++x) {
    for (FiniteLGroup::Element y = 0; y < g.order(); ++y) {
      if (gamma(g.mul(x, y)) != g.mul(gamma(x), gamma(y))) {
        return "gamma(" + str(x) + "*" + str(y) + ") != gamma(" + str(x) + ")*gamma(" + str(y) + ")";
      }
    }
  }
  if (!gamma.power(gamma.order()).is_identity()) return "gamma^order is not the identity";
  if (gamma.order() != ipow(g.prime(), gamma.m())) return "order is not l^m";
  const auto perm = gamma.class_permutation(g);
  std::vector<std::size_t> cur = perm;
  for (std::int64_t j = 1; j < gamma.order(); ++j) {
    std::vector<std::size_t> next(cur.size());
    for (std::size_t c = 0; c < cur.size(); ++c) next[c] = perm[cur[c]];
    cur = std::move(next);
  }
  for (std::size_t c = 0; c < cur.size(); ++c) {
    if (cur[c] != c) return "class permutation order does not divide the order of gamma";
  }
  return std::nullopt;
}

Witness orthogonality_suite(const FiniteLGroup& g, const std::vector<Character>& table) {
  const std::int64_t l = g.prime();
  const int e = g.exponent_log();
  if (table.size() != g.class_count()) return "table has " + str(table.size()) + " rows for " + str(g.class_count()) + " classes";
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = i; j < table.size(); ++j) {
      const CyclotomicNumber ip = inner_product(g, table[i], table[j]);
      const bool ok = i == j ? ip.is_one() : ip.is_zero();
      if (!ok) return "<chi_" + str(i) + ", chi_" + str(j) + "> = " + to_string(ip);
    }
  }
  const Rational one(1);
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    for (std::size_t d = c; d < g.class_count(); ++d) {
      HermitianAccumulator acc(l, e);
      for (const auto& chi : table) acc.add(chi.values[c], chi.values[d], one);
      const CyclotomicNumber sum = acc.result();
      const std::int64_t expect = c == d ? static_cast<std::int64_t>(g.order() / g.classes()[c].members.size()) : 0;
      if (!(sum == CyclotomicNumber::from_integer(l, e, expect))) {
        return "column sum over classes " + str(c) + ", " + str(d) + " = " + to_string(sum);
      }
    }
  }
  return std::nullopt;
}

std::size_t derived_subgroup_order(const FiniteLGroup& g) {
  std::set<FiniteLGroup::Element> comm;
  for (FiniteLGroup::Element x = 0; x < g.order(); ++x) {
    for (FiniteLGroup::Element y = 0; y < g.order(); ++y) {
      comm.insert(g.mul(g.mul(x, y), g.mul(g.inverse(x), g.inverse(y))));
    }
  }
  std::set<FiniteLGroup::Element> closure{g.identity()};
  std::vector<FiniteLGroup::Element> frontier{g.identity()};
  while (!frontier.empty()) {
    const auto x = frontier.back();
    frontier.pop_back();
    for (auto c : comm) {
      const auto y = g.mul(x, c);
      if (closure.insert(y).second) frontier.push_back(y);
    }
  }
  return closure.size();
}

Witness degree_suite(const FiniteLGroup& g, const std::vector<Character>& table) {
  std::int64_t sum = 0;
  std::size_t linear = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::int64_t d = table[i].degree;
    if (!log_exact(d, g.prime())) return "deg chi_" + str(i) + " = " + std::to_string(d) + " is not a power of l";
    if (static_cast<std::int64_t>(g.order()) % d != 0) return "deg chi_" + str(i) + " does not divide |H|";
    if (!(table[i].values[0] == CyclotomicNumber::from_integer(g.prime(), g.exponent_log(), d))) {
      return "chi_" + str(i) + "(1) differs from its degree";
    }
    sum += d * d;
    if (d == 1) ++linear;
  }
  if (sum != static_cast<std::int64_t>(g.order())) return "sum of squared degrees = " + std::to_string(sum);
  const std::size_t index = g.order() / derived_subgroup_order(g);
  if (linear != index) return str(linear) + " linear characters but [H:H'] = " + str(index);
  return std::nullopt;
}

Witness idempotent_suite(const Analysis& a) {
  const FiniteLGroup& g = a.group;
  const auto one = GroupAlgebraElement::identity(g);
  std::vector<GroupAlgebraElement> es;
  GroupAlgebraElement total(g);
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    es.push_back(e_idem(g, a.table[i]));
    const auto& e = es.back();
    if (!(ga_mul(e, e) == e)) return "e(chi_" + str(i) + ") is not idempotent";
    if (!e.is_central()) return "e(chi_" + str(i) + ") is not central";
    if (!eps_idem(g, a.table, i).is_rational()) return "epsilon(chi_" + str(i) + ") is not rational";
    total += e;
  }
  if (!(total == one)) return "the e(chi) do not sum to 1";
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (!ga_mul(es[i], es[j]).is_zero()) return "e(chi_" + str(i) + ") e(chi_" + str(j) + ") != 0";
    }
  }
  std::vector<GroupAlgebraElement> cs;
  GroupAlgebraElement ctotal(g);
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    cs.push_back(component_idempotent(g, a.table, a.components[k]));
    const auto& c = cs.back();
    if (!c.is_rational()) return "component " + str(k + 1) + " idempotent is not rational";
    if (!(gamma_conjugate(c, a.gamma, 1) == c)) return "component " + str(k + 1) + " idempotent is not gamma-stable";
    if (!(ga_mul(c, c) == c)) return "component " + str(k + 1) + " idempotent is not idempotent";
    ctotal += c;
  }
  if (!(ctotal == one)) return "component idempotents do not sum to 1";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      if (!ga_mul(cs[i], cs[j]).is_zero()) return "components " + str(i + 1) + " and " + str(j + 1) + " are not orthogonal";
    }
  }
  return std::nullopt;
}

Witness dimension_suite(const Analysis& a) {
  const std::int64_t l = a.group.prime();
  const std::int64_t lm = ipow(l, a.gamma.m());
  std::int64_t total = 0;
  std::set<std::size_t> covered;
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const auto& d = a.components[k];
    const auto& inv = d.invariants;
    const std::int64_t alt = d.chi_degree * d.chi_degree * phi_prime_power(l, inv.L_exponent) * lm / inv.w;
    if (alt != d.dimension) return "component " + str(k + 1) + ": dim " + std::to_string(d.dimension) + " vs " + std::to_string(alt);
    if (d.schur_index * d.matrix_size != d.chi_degree) return "component " + str(k + 1) + ": s n != chi(1)";
    for (auto idx : d.orbit) {
      if (!covered.insert(idx).second) return "character " + str(idx) + " lies in two components";
    }
    total += d.dimension;
  }
  if (covered.size() != a.table.size()) return "components cover " + str(covered.size()) + " of " + str(a.table.size()) + " characters";
  const std::int64_t expect = lm * static_cast<std::int64_t>(a.group.order());
  if (total != expect) return "sum of dimensions " + std::to_string(total) + " != l^m |H| = " + std::to_string(expect);
  return std::nullopt;
}

Witness roquette_suite(const Analysis& a) {
  const std::int64_t l = a.group.prime();
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const auto& d = a.components[k];
    if (d.invariants.w == 1 && d.schur_index != 1) return "component " + str(k + 1) + " has w = 1 but s = " + std::to_string(d.schur_index);
    if (!log_exact(d.schur_index, l)) return "component " + str(k + 1) + ": s is not a power of l";
    if (d.chi_degree % d.schur_index != 0) return "component " + str(k + 1) + ": s does not divide chi(1)";
    if (d.skew_field.has_value() != (d.schur_index > 1)) return "component " + str(k + 1) + ": skew field presence disagrees with s";
  }
  return std::nullopt;
}

Witness g0_suite(const Analysis& a) {
  const std::int64_t l = a.group.prime();
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const auto& inv = a.components[k].invariants;
    if (inv.g0 != expected_g0(l, inv.eta_exponent, inv.r)) return "component " + str(k + 1) + ": G_0 differs from {k = 1 mod l^(e-r)}";
    if (static_cast<std::int64_t>(inv.g0.size()) != inv.w / inv.v) return "component " + str(k + 1) + ": |G_0| != w/v";
    const std::size_t target = inv.gamma_orbit[static_cast<std::size_t>(inv.v % inv.w)];
    const std::int64_t sigma = inv.eta_exponent == 0 ? 1 : inv.sigma_v;
    if (!(galois_act_char(a.table[inv.representative], sigma) == a.table[target])) {
      return "component " + str(k + 1) + ": sigma_v does not carry eta to eta^(gamma^v)";
    }
  }
  return std::nullopt;
}

Witness completion_suite(const std::vector<ComponentRecord>& records) {
  for (std::size_t k = 0; k < records.size(); ++k) {
    const std::int64_t s = records[k].descriptor.schur_index;
    for (const auto& c : records[k].completions) {
      const std::string where = "component " + str(k + 1) + " at " + c.prime;
      if (c.cd != 3) return where + ": cd != 3";
      const std::string expect_sk1 = c.prime == "ell" ? "unknown" : "yes";
      if (c.sk1_trivial != expect_sk1) return where + ": SK1 flag " + c.sk1_trivial;
      if (c.prime != "ell") continue;
      if (s == 1) {
        if (c.skew) return where + ": split component has a skew completion";
        continue;
      }
      if (!c.skew) return where + ": missing skew completion";
      if (c.skew->ramification * c.skew->residue_degree != s * s) return where + ": e f != s^2";
      if (!c.skew->witness_verified || c.skew->witness_unit_valuation != 0) return where + ": norm witness not verified";
    }
  }
  return std::nullopt;
}

Witness norm_certificate_suite(const Analysis& a) {
  const std::int64_t l = a.group.prime();
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const auto& inv = a.components[k].invariants;
    if (a.components[k].schur_index == 1) continue;
    for (int t = 0; t <= inv.r; ++t) {
      const auto cert = norm_order_certificate(l, inv.eta_exponent, inv.r, t);
      const NormVerdict expect = t < inv.r ? NormVerdict::obstructed : NormVerdict::representable;
      if (!cert.lattice_verified) return "component " + str(k + 1) + ", t = " + std::to_string(t) + ": trace lattice mismatch";
      if (cert.verdict != expect) return "component " + str(k + 1) + ", t = " + std::to_string(t) + ": verdict " + to_string(cert.verdict);
    }
    const auto f = TruncatedSeries::one(l, inv.eta_exponent, 2) +
                   CyclotomicNumber::zeta_power(l, inv.eta_exponent, 1) * TruncatedSeries::variable(l, inv.eta_exponent, 2);
    const auto red = unit_reduction_check(f, inv.L_exponent, 0);
    if (red.verdict != UnitVerdict::obstructed) return "component " + str(k + 1) + ": 1 + zeta T reduction " + to_string(red.verdict);
  }
  return std::nullopt;
}

Witness weierstrass_suite(const Analysis& a, std::size_t precision) {
  const std::int64_t l = a.group.prime();
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    const auto& inv = a.components[k].invariants;
    if (a.components[k].schur_index == 1) continue;
    const int e = inv.eta_exponent;
    const std::int64_t n = ipow(l, inv.r);
    const auto f = (TruncatedSeries::one(l, e, precision) + TruncatedSeries::variable(l, e, precision)).pow(n) -
                   TruncatedSeries::one(l, e, precision);
    if (static_cast<std::int64_t>(precision) <= n) {
      return "component " + str(k + 1) + ": (1+T)^" + std::to_string(n) + " - 1 needs series precision above " +
             std::to_string(n);
    }
    try {
      const auto p = weierstrass_prepare(f);
      const std::string where = "component " + str(k + 1) + ": (1+T)^" + std::to_string(n) + " - 1";
      if (p.mu != 0 || p.lambda() != n) return where + " gave mu = " + std::to_string(p.mu) + ", lambda = " + std::to_string(p.lambda());
      if (!is_distinguished(p.distinguished)) return where + ": F is not distinguished";
      if (!p.unit.is_unit()) return where + ": u is not a unit";
      if (!(recompose(p, precision) == f)) return where + ": recomposition differs";
    } catch (const PrecisionError& err) {
      return "component " + str(k + 1) + ": " + err.what() + " (needs series precision " +
             std::to_string(err.required_precision()) + ")";
    }
  }
  return std::nullopt;
}

}  // namespace

Analysis analyze(const InputDocument& doc) {
  FiniteLGroup group = build_group(doc.l, doc.group, doc.options.max_order);
  GroupAutomorphism gamma = build_gamma(group, doc.gamma);
  std::vector<Character> table = character_table(group);
  std::vector<ComponentDescriptor> components = decompose(group, gamma, table);
  return Analysis{std::move(group), std::move(gamma), std::move(table), std::move(components)};
}

namespace {

std::vector<ComponentRecord> component_records(const Analysis& a, const std::vector<PrimeSpec>& primes) {
  std::vector<ComponentRecord> out;
  for (const auto& d : a.components) {
    ComponentRecord rec;
    rec.descriptor = d;
    for (const auto& v : a.table[d.invariants.representative].values) rec.representative_values.push_back(to_string(v));
    for (const auto& p : primes) rec.completions.push_back(completion_descriptor(d, p, a.group.prime()));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SuiteResult> verify_with(const Analysis& a, VerifyLevel level, std::size_t precision,
                                     const std::vector<ComponentRecord>& records) {
  std::vector<SuiteResult> out;
  out.push_back(run_suite("group", [&] { return group_suite(a.group); }));
  out.push_back(run_suite("gamma", [&] { return gamma_suite(a.group, a.gamma); }));
  if (a.group.class_count() <= kOrthogonalityClassCap) {
    out.push_back(run_suite("orthogonality", [&] { return orthogonality_suite(a.group, a.table); }));
  } else {
    out.push_back(skipped("orthogonality", "more than " + str(kOrthogonalityClassCap) + " classes"));
  }
  out.push_back(run_suite("degrees", [&] { return degree_suite(a.group, a.table); }));
  if (a.group.order() <= kIdempotentOrderCap) {
    out.push_back(run_suite("idempotents", [&] { return idempotent_suite(a); }));
  } else {
    out.push_back(skipped("idempotents", "|H| > " + str(kIdempotentOrderCap)));
  }
  out.push_back(run_suite("dimension", [&] { return dimension_suite(a); }));
  out.push_back(run_suite("roquette", [&] { return roquette_suite(a); }));
  out.push_back(run_suite("g0", [&] { return g0_suite(a); }));
  out.push_back(run_suite("completion", [&] { return completion_suite(records); }));
  if (level == VerifyLevel::full) {
    out.push_back(run_suite("norm_certificates", [&] { return norm_certificate_suite(a); }));
    out.push_back(run_suite("weierstrass", [&] { return weierstrass_suite(a, precision); }));
  }
  return out;
}

}  // namespace

std::vector<SuiteResult> verify(const Analysis& a, VerifyLevel level, std::size_t series_precision) {
  const std::vector<PrimeSpec> primes{PrimeSpec{PrimeKind::T, {}}, PrimeSpec{PrimeKind::ell, {}}};
  return verify_with(a, level, series_precision, component_records(a, primes));
}

Report run(const InputDocument& doc) {
  const Analysis a = analyze(doc);
  Report r;
  r.l = doc.l;
  r.group = describe_group(doc.group);
  r.gamma = describe_gamma(doc.gamma);
  r.verify = to_string(doc.options.verify);
  r.series_precision = doc.options.series_precision;
  for (const auto& p : doc.options.report_primes) r.report_primes.push_back(p.label());
  r.max_order = doc.options.max_order;
  r.group_order = a.group.order();
  r.class_count = a.group.class_count();
  r.exponent = a.group.exponent();
  r.gamma_order = a.gamma.order();
  r.m = a.gamma.m();
  r.components = component_records(a, doc.options.report_primes);
  for (const auto& c : a.components) r.dimension_total += c.dimension;
  r.verification = verify_with(a, doc.options.verify, doc.options.series_precision, r.components);
  return r;
}

int exit_code(const Report& report) { return report.all_passed() ? 0 : 2; }

}  // namespace iwasawa
