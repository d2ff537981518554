// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "iwasawa/completion.hpp"
#include "iwasawa/input.hpp"
#include "iwasawa/report.hpp"
#include "iwasawa/run.hpp"
#include "iwasawa/series.hpp"

using namespace iwasawa;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

InputDocument document(const std::string& text) {
  auto r = parse_input(text);
  if (!r.ok()) throw std::runtime_error("corpus document rejected: " + to_string(r.diagnostics.front()));
  return *r.document;
}

std::string abelian_doc(const std::vector<std::int64_t>& inv, const std::string& gamma = "") {
  std::string s = "l: 3\ngroup:\n  kind: abelian\n  invariants: [";
  for (std::size_t i = 0; i < inv.size(); ++i) s += (i ? ", " : "") + std::to_string(inv[i]);
  s += "]\n";
  if (!gamma.empty()) s += "gamma:\n  g1: " + gamma + "\n";
  return s;
}

const std::string kGolden = abelian_doc({9}, "g1^4");

struct CorpusEntry {
  std::string name;
  InputDocument doc;
};

// All abelian 3-groups of order <= 81, heisenberg_3, and C27 with every gamma
// of 3-power order (h -> h^k, k = 1 mod 3).
std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  const std::vector<std::vector<std::int64_t>> abelian{{},        {3},       {9},    {3, 3},    {27},
                                                       {9, 3},    {3, 3, 3}, {81},   {27, 3},   {9, 9},
                                                       {9, 3, 3}, {3, 3, 3, 3}};
  for (const auto& inv : abelian) {
    const std::string text = abelian_doc(inv);
    out.push_back({describe_group(AbelianSpec{inv}), document(text)});
  }
  out.push_back({"heisenberg_3", document("l: 3\ngroup:\n  kind: preset\n  name: heisenberg_3\n")});
  out.push_back({"heisenberg_3, g1 -> g1*g2",
                 document("l: 3\ngroup:\n  kind: preset\n  name: heisenberg_3\ngamma:\n  g1: g1*g2\n")});
  for (int k = 1; k < 27; k += 3) {
    out.push_back({"C27, h -> h^" + std::to_string(k), document(abelian_doc({27}, "g1^" + std::to_string(k)))});
  }
  out.push_back({"C9, h -> h^4", document(kGolden)});
  return out;
}

struct Analyzed {
  std::string name;
  Analysis a;
};

std::vector<Analyzed> analyze_corpus(double& seconds) {
  const auto t0 = Clock::now();
  std::vector<Analyzed> out;
  for (auto& e : corpus()) out.push_back({e.name, analyze(e.doc)});
  seconds = seconds_since(t0);
  return out;
}

const SuiteResult* find_suite(const std::vector<SuiteResult>& suites, const std::string& name) {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

Outcome criterion_golden() {
  Outcome o;
  const auto t0 = Clock::now();
  const Report r = run(document(kGolden));
  const double secs = seconds_since(t0);
  o.require(r.components.size() == 3, "expected 3 components, got " + std::to_string(r.components.size()));
  const ComponentRecord* z9 = nullptr;
  for (const auto& c : r.components) {
    if (c.descriptor.invariants.eta_exponent == 2) z9 = &c;
  }
  o.require(z9 != nullptr, "no component with Q(eta) = Q(zeta_9)");
  if (z9) {
    const auto& d = z9->descriptor;
    o.require(d.chi_degree == 3, "chi(1) != 3");
    o.require(d.invariants.w == 3, "w != 3");
    o.require(d.invariants.v == 1, "v != 1");
    o.require(d.schur_index == 3, "s != 3");
    o.require(d.matrix_size == 1, "n != 1");
    o.require(d.skew_field && ipow(3, d.skew_field->maximal_subfield_exponent) == 9, "maximal subfield conductor != 9");
    o.require(ipow(3, d.center_exponent) == 3, "center conductor != 3");
    o.require(d.center_power == 3, "center power != 3");
    // sigma_v = sigma^2 for sigma: zeta_9 -> zeta_9^2
    o.require(d.skew_field && d.skew_field->sigma_k == 2 * 2 % 9, "sigma_v != sigma^2");
  }
  o.require(r.all_passed(), "a verification suite failed");
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "3 components, runtime " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_dimension(const std::vector<Analyzed>& corpus, double analyze_seconds) {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& e : corpus) {
    std::int64_t total = 0;
    for (const auto& c : e.a.components) total += c.dimension;
    const std::int64_t expect = e.a.gamma.order() * static_cast<std::int64_t>(e.a.group.order());
    o.require(total == expect, e.name + ": " + std::to_string(total) + " != " + std::to_string(expect));
  }
  const double secs = analyze_seconds + seconds_since(t0);
  o.require(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  if (o.ok) o.detail = std::to_string(corpus.size()) + " groups, " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion_tables(const std::vector<Analyzed>& corpus) {
  Outcome o;
  for (const auto& e : corpus) {
    const auto& g = e.a.group;
    const auto& t = e.a.table;
    const std::int64_t l = g.prime();
    const int E = g.exponent_log();
    o.require(t.size() == g.class_count(), e.name + ": table is not square");
    std::int64_t sum = 0;
    for (const auto& chi : t) {
      sum += chi.degree * chi.degree;
      o.require(log_exact(chi.degree, l).has_value(), e.name + ": degree not an l-power");
    }
    o.require(sum == static_cast<std::int64_t>(g.order()), e.name + ": sum of squared degrees");
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t j = i; j < t.size(); ++j) {
        HermitianAccumulator acc(l, E);
        for (std::size_t c = 0; c < g.class_count(); ++c) {
          acc.add(t[i].values[c], t[j].values[c], make_rational(static_cast<std::int64_t>(g.classes()[c].members.size())));
        }
        const auto v = acc.result();
        o.require(v == CyclotomicNumber::from_integer(l, E, i == j ? static_cast<std::int64_t>(g.order()) : 0),
                  e.name + ": row relation " + std::to_string(i) + "," + std::to_string(j));
      }
    }
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      for (std::size_t d = c; d < g.class_count(); ++d) {
        HermitianAccumulator acc(l, E);
        for (const auto& chi : t) acc.add(chi.values[c], chi.values[d], make_rational(1));
        const std::int64_t centralizer = static_cast<std::int64_t>(g.order() / g.classes()[c].members.size());
        o.require(acc.result() == CyclotomicNumber::from_integer(l, E, c == d ? centralizer : 0),
                  e.name + ": column relation " + std::to_string(c) + "," + std::to_string(d));
      }
    }
    if (!o.ok) break;
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " groups";
  return o;
}

Outcome criterion_idempotents(const std::vector<Analyzed>& corpus) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : corpus) {
    if (e.a.group.order() > 27) continue;
    const auto suites = verify(e.a, VerifyLevel::fast, 16);
    const auto* s = find_suite(suites, "idempotents");
    o.require(s && s->status == SuiteStatus::pass, e.name + ": " + (s ? s->witness : "suite missing"));
    ++checked;
  }
  if (o.ok) o.detail = std::to_string(checked) + " groups with |H| <= 27";
  return o;
}

Outcome criterion_roquette(const std::vector<Analyzed>& corpus) {
  Outcome o;
  std::size_t components = 0;
  for (const auto& e : corpus) {
    for (const auto& c : e.a.components) {
      ++components;
      if (c.invariants.w == 1) o.require(c.schur_index == 1, e.name + ": w = 1 but s > 1");
      o.require(log_exact(c.schur_index, 3).has_value(), e.name + ": s not a power of 3");
      o.require(c.chi_degree % c.schur_index == 0, e.name + ": s does not divide chi(1)");
    }
  }
  if (o.ok) o.detail = std::to_string(components) + " components";
  return o;
}

Outcome criterion_g0(const std::vector<Analyzed>& corpus) {
  Outcome o;
  std::size_t orbits = 0;
  for (const auto& e : corpus) {
    for (const auto& c : e.a.components) {
      const auto& inv = c.invariants;
      ++orbits;
      std::vector<std::int64_t> expect;
      if (inv.eta_exponent == 0) {
        expect = {0};
      } else {
        const std::int64_t mod = ipow(3, inv.eta_exponent);
        const std::int64_t step = ipow(3, inv.eta_exponent - inv.r);
        for (std::int64_t k = 1; k < mod; k += step) expect.push_back(k);
      }
      o.require(inv.g0 == expect, e.name + ": G_0 mismatch");
      o.require(static_cast<std::int64_t>(inv.g0.size()) == inv.w / inv.v, e.name + ": |G_0| != w/v");
    }
  }
  if (o.ok) o.detail = std::to_string(orbits) + " orbits";
  return o;
}

Outcome criterion_norm_certificates() {
  Outcome o;
  std::size_t count = 0;
  for (int e = 1; e <= 3; ++e) {
    for (int r = 0; r < e; ++r) {
      // independent trace: sum over k = 1 mod 3^{e-r}
      const std::int64_t mod = ipow(3, e);
      const std::int64_t step = ipow(3, e - r);
      for (std::int64_t i = 0; i < ipow(3, r); ++i) {
        CyclotomicNumber tr(3, e);
        for (std::int64_t k = 1; k < mod; k += step) tr += CyclotomicNumber::zeta_power(3, e, i * k);
        const auto expect = CyclotomicNumber::from_integer(3, e, i == 0 ? ipow(3, r) : 0);
        o.require(tr == expect, "Tr(zeta^" + std::to_string(i) + ") at e = " + std::to_string(e));
      }
      for (int t = 0; t <= r + 1; ++t) {
        const auto cert = norm_order_certificate(3, e, r, t);
        ++count;
        o.require(cert.lattice_verified, "lattice not verified at e, r, t = " + std::to_string(e) + ", " +
                                             std::to_string(r) + ", " + std::to_string(t));
        o.require((cert.verdict == NormVerdict::obstructed) == (t < r),
                  "verdict at e, r, t = " + std::to_string(e) + ", " + std::to_string(r) + ", " + std::to_string(t));
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(cert.traces.size()); ++i) {
          const auto expect = CyclotomicNumber::from_integer(3, e - r, i == 0 ? ipow(3, r) : 0);
          o.require(cert.traces[static_cast<std::size_t>(i)] == expect, "certificate trace " + std::to_string(i));
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " certificates";
  return o;
}

Outcome criterion_weierstrass() {
  Outcome o;
  std::mt19937 rng(20240601);
  const std::size_t M = 16;
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> pick_e(0, 2);
  std::uniform_int_distribution<int> pick_lambda(0, 6);
  std::uniform_int_distribution<int> pick_mu(0, 2);
  auto random_integral = [&](int e, std::int64_t scale) {
    std::vector<Rational> c(static_cast<std::size_t>(phi_prime_power(3, e)));
    for (auto& x : c) x = make_rational(coef(rng) * scale);
    return CyclotomicNumber::from_coefficients(3, e, c);
  };
  for (int it = 0; it < 200; ++it) {
    const int e = pick_e(rng);
    const auto lambda = static_cast<std::size_t>(pick_lambda(rng));
    const int mu = pick_mu(rng);
    std::vector<CyclotomicNumber> c;
    for (std::size_t i = 0; i < M; ++i) {
      if (i < lambda) c.push_back(random_integral(e, 3));
      else if (i == lambda) c.push_back(CyclotomicNumber::one(3, e) + random_integral(e, 3));
      else c.push_back(random_integral(e, 1));
      c.back() *= make_rational(ipow(3, mu));
    }
    const auto f = TruncatedSeries::from_coefficients(3, e, M, c);
    const auto p = weierstrass_prepare(f);
    o.require(recompose(p, M) == f, "series " + std::to_string(it) + ": recomposition differs");
    o.require(is_distinguished(p.distinguished), "series " + std::to_string(it) + ": F not distinguished");
    o.require(p.lambda() == static_cast<std::int64_t>(lambda), "series " + std::to_string(it) + ": lambda");
    o.require(p.unit.is_unit(), "series " + std::to_string(it) + ": u not a unit");
    o.require(p.mu == mu * (e == 0 ? 1 : phi_prime_power(3, e)), "series " + std::to_string(it) + ": mu");
  }
  const auto one = TruncatedSeries::one(3, 0, M);
  const auto f = (one + TruncatedSeries::variable(3, 0, M)).pow(3) - one;
  const auto p = weierstrass_prepare(f);
  o.require(p.lambda() == 3 && p.mu == 0, "(1+T)^3 - 1: lambda = " + std::to_string(p.lambda()) + ", mu = " + std::to_string(p.mu));
  if (o.ok) o.detail = "200 series at M = 16; (1+T)^3 - 1 gives lambda = 3, mu = 0";
  return o;
}

Outcome criterion_completion(const std::vector<Analyzed>& corpus) {
  Outcome o;
  const std::vector<PrimeSpec> primes{parse_prime("T"), parse_prime("f:3:1"), parse_prime("f:3:0:1"), parse_prime("ell")};
  for (const auto& e : corpus) {
    for (const auto& comp : e.a.components) {
      const std::int64_t degL = phi_prime_power(3, comp.center_exponent);
      for (const auto& p : primes) {
        const auto d = completion_descriptor(comp, p, 3);
        o.require(d.cd == 3, e.name + ": cd != 3");
        switch (p.kind) {
          case PrimeKind::T:
            o.require(d.sk1_trivial == "yes" && d.residue_degree == degL, e.name + ": (T) descriptor");
            break;
          case PrimeKind::f:
            o.require(d.sk1_trivial == "yes" && d.residue_degree == degL * p.degree(), e.name + ": (f) descriptor");
            o.require(d.irreducibility == (p.degree() == 1 ? "certified" : "assumed"), e.name + ": irreducibility flag");
            break;
          case PrimeKind::ell:
            o.require(d.sk1_trivial == "unknown" && d.residue_field == "F_3((Tbar))", e.name + ": (ell) descriptor");
            o.require(d.skew.has_value() == (comp.schur_index > 1), e.name + ": skew completion presence");
            if (d.skew) {
              o.require(d.skew->ramification * d.skew->residue_degree == comp.schur_index * comp.schur_index,
                        e.name + ": e f != s^2");
              o.require(d.skew->witness_verified && d.skew->witness_unit_valuation == 0, e.name + ": norm witness");
            }
            break;
        }
      }
    }
  }
  // golden example at (ell): N(1 - zeta_9) = unit * (1 - zeta_3)
  const Report r = run(document(kGolden));
  bool found = false;
  for (const auto& c : r.components) {
    if (c.descriptor.schur_index != 3) continue;
    for (const auto& d : c.completions) {
      if (d.prime != "ell" || !d.skew) continue;
      found = true;
      CyclotomicNumber n = CyclotomicNumber::one(3, 2);
      for (std::int64_t k : {1, 4, 7}) n *= CyclotomicNumber::one(3, 2) - CyclotomicNumber::zeta_power(3, 2, k);
      const auto norm = n.restrict_to(1);
      const auto unit = norm / (CyclotomicNumber::one(3, 1) - CyclotomicNumber::zeta_power(3, 1, 1));
      o.require(d.skew->ramification * d.skew->residue_degree == 9, "golden: e f != 9");
      o.require(d.skew->witness_norm == to_string(norm), "golden: witness norm " + d.skew->witness_norm);
      o.require(d.skew->witness_unit == to_string(unit), "golden: witness unit " + d.skew->witness_unit);
      o.require(l_valuation(unit).value() == 0 && d.skew->witness_unit_valuation == 0, "golden: unit valuation");
    }
  }
  o.require(found, "golden: no skew completion at (ell)");
  if (o.ok) o.detail = "cd = 3, SK1 yes/yes/unknown, golden e f = 9 with unit valuation 0";
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  const std::vector<std::string> docs{
      kGolden, kGolden + "options:\n  verify_level: full\n  report_primes: [T, f:3:1, ell]\n",
      "l: 3\ngroup:\n  kind: preset\n  name: heisenberg_3\n", abelian_doc({27}, "g1^10") + "options:\n  verify_level: full\n"};
  for (const auto& text : docs) {
    const auto doc = document(text);
    const std::string a = emit_machine(run(doc));
    const std::string b = emit_machine(run(document(text)));
    o.require(a == b, "reports differ between runs");
    const Report back = parse_machine(a);
    o.require(back == run(doc), "parsed report differs from the original");
    o.require(emit_machine(back) == a, "re-emitted report differs");
  }
  if (o.ok) o.detail = std::to_string(docs.size()) + " documents";
  return o;
}

}  // namespace

int main() {
  double analyze_seconds = 0;
  const std::vector<Analyzed> c = analyze_corpus(analyze_seconds);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden example C9, h -> h^4", criterion_golden},
      {"dimension accounting", [&] { return criterion_dimension(c, analyze_seconds); }},
      {"character-table suites", [&] { return criterion_tables(c); }},
      {"idempotent suites", [&] { return criterion_idempotents(c); }},
      {"Roquette degeneration", [&] { return criterion_roquette(c); }},
      {"G_0 identification", [&] { return criterion_g0(c); }},
      {"norm-order certificates", criterion_norm_certificates},
      {"Weierstrass recomposition", criterion_weierstrass},
      {"completion metadata", [&] { return criterion_completion(c); }},
      {"determinism and round trip", criterion_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& err) {
      o.ok = false;
      o.detail = std::string("exception: ") + err.what();
    }
    failed += !o.ok;
    std::printf("%s %2zu %s: %s [%.2f s]\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                seconds_since(t0));
  }
  return failed == 0 ? 0 : 1;
}
