#include "iwasawa/report.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace iwasawa {

using Json = nlohmann::ordered_json;

std::string to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::pass: return "pass";
    case SuiteStatus::fail: return "fail";
    default: return "skipped";
  }
}

namespace {

SuiteStatus parse_status(const std::string& s) {
  if (s == "pass") return SuiteStatus::pass;
  if (s == "fail") return SuiteStatus::fail;
  if (s == "skipped") return SuiteStatus::skipped;
  throw std::invalid_argument("unknown suite status '" + s + "'");
}

Json skew_json(const std::optional<SkewCompletion>& sk) {
  if (!sk) return nullptr;
  return Json{{"index", sk->index},
              {"ramification", sk->ramification},
              {"residue_degree", sk->residue_degree},
              {"residue_commutative", sk->residue_commutative},
              {"residue_polynomial", sk->residue_polynomial},
              {"witness_norm", sk->witness_norm},
              {"witness_unit", sk->witness_unit},
              {"witness_unit_valuation", sk->witness_unit_valuation},
              {"witness_verified", sk->witness_verified}};
}

Json completion_json(const CompletionDescriptor& c) {
  return Json{{"prime", c.prime},
              {"completed_center", c.completed_center},
              {"residue_field", c.residue_field},
              {"residue_degree", c.residue_degree},
              {"cd", c.cd},
              {"sk1_trivial", c.sk1_trivial},
              {"irreducibility", c.irreducibility},
              {"skew", skew_json(c.skew)}};
}

Json component_json(const ComponentRecord& rec) {
  const ComponentDescriptor& d = rec.descriptor;
  const OrbitInvariants& inv = d.invariants;
  Json skew = nullptr;
  if (d.skew_field) {
    skew = Json{{"maximal_subfield_exponent", d.skew_field->maximal_subfield_exponent},
                {"center_exponent", d.skew_field->center_exponent},
                {"sigma_k", d.skew_field->sigma_k},
                {"gamma_power", d.skew_field->gamma_power}};
  }
  Json completions = Json::array();
  for (const auto& c : rec.completions) completions.push_back(completion_json(c));
  return Json{{"representative", inv.representative},
              {"orbit", d.orbit},
              {"gamma_orbit", inv.gamma_orbit},
              {"representative_values", rec.representative_values},
              {"eta_degree", d.eta_degree},
              {"eta_exponent", inv.eta_exponent},
              {"w", inv.w},
              {"v", inv.v},
              {"r", inv.r},
              {"g0_order", inv.g0_order},
              {"g0", inv.g0},
              {"sigma_v", inv.sigma_v},
              {"L_exponent", inv.L_exponent},
              {"m", d.m},
              {"chi_degree", d.chi_degree},
              {"schur_index", d.schur_index},
              {"matrix_size", d.matrix_size},
              {"center_exponent", d.center_exponent},
              {"center_power", d.center_power},
              {"skew_field", skew},
              {"dimension", d.dimension},
              {"completions", completions}};
}

std::optional<SkewCompletion> skew_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  SkewCompletion sk;
  j.at("index").get_to(sk.index);
  j.at("ramification").get_to(sk.ramification);
  j.at("residue_degree").get_to(sk.residue_degree);
  j.at("residue_commutative").get_to(sk.residue_commutative);
  j.at("residue_polynomial").get_to(sk.residue_polynomial);
  j.at("witness_norm").get_to(sk.witness_norm);
  j.at("witness_unit").get_to(sk.witness_unit);
  j.at("witness_unit_valuation").get_to(sk.witness_unit_valuation);
  j.at("witness_verified").get_to(sk.witness_verified);
  return sk;
}

CompletionDescriptor completion_from(const Json& j) {
  CompletionDescriptor c;
  j.at("prime").get_to(c.prime);
  j.at("completed_center").get_to(c.completed_center);
  j.at("residue_field").get_to(c.residue_field);
  j.at("residue_degree").get_to(c.residue_degree);
  j.at("cd").get_to(c.cd);
  j.at("sk1_trivial").get_to(c.sk1_trivial);
  j.at("irreducibility").get_to(c.irreducibility);
  c.skew = skew_from(j.at("skew"));
  return c;
}

ComponentRecord component_from(const Json& j) {
  ComponentRecord rec;
  ComponentDescriptor& d = rec.descriptor;
  OrbitInvariants& inv = d.invariants;
  j.at("representative").get_to(inv.representative);
  j.at("orbit").get_to(d.orbit);
  j.at("gamma_orbit").get_to(inv.gamma_orbit);
  j.at("representative_values").get_to(rec.representative_values);
  j.at("eta_degree").get_to(d.eta_degree);
  j.at("eta_exponent").get_to(inv.eta_exponent);
  j.at("w").get_to(inv.w);
  j.at("v").get_to(inv.v);
  j.at("r").get_to(inv.r);
  j.at("g0_order").get_to(inv.g0_order);
  j.at("g0").get_to(inv.g0);
  j.at("sigma_v").get_to(inv.sigma_v);
  j.at("L_exponent").get_to(inv.L_exponent);
  j.at("m").get_to(d.m);
  j.at("chi_degree").get_to(d.chi_degree);
  j.at("schur_index").get_to(d.schur_index);
  j.at("matrix_size").get_to(d.matrix_size);
  j.at("center_exponent").get_to(d.center_exponent);
  j.at("center_power").get_to(d.center_power);
  if (const Json& s = j.at("skew_field"); !s.is_null()) {
    CyclicPresentation p;
    s.at("maximal_subfield_exponent").get_to(p.maximal_subfield_exponent);
    s.at("center_exponent").get_to(p.center_exponent);
    s.at("sigma_k").get_to(p.sigma_k);
    s.at("gamma_power").get_to(p.gamma_power);
    d.skew_field = p;
  }
  j.at("dimension").get_to(d.dimension);
  for (const auto& c : j.at("completions")) rec.completions.push_back(completion_from(c));
  return rec;
}

}  // namespace

bool Report::all_passed() const {
  for (const auto& s : verification) {
    if (s.status == SuiteStatus::fail) return false;
  }
  return true;
}

std::string emit_machine(const Report& r) {
  Json components = Json::array();
  for (const auto& c : r.components) components.push_back(component_json(c));
  Json suites = Json::array();
  for (const auto& s : r.verification) {
    suites.push_back(Json{{"name", s.name}, {"status", to_string(s.status)}, {"witness", s.witness}});
  }
  Json doc{{"input",
            {{"l", r.l},
             {"group", r.group},
             {"gamma", r.gamma},
             {"verify", r.verify},
             {"series_precision", r.series_precision},
             {"report_primes", r.report_primes},
             {"max_order", r.max_order}}},
           {"group",
            {{"order", r.group_order},
             {"class_count", r.class_count},
             {"exponent", r.exponent},
             {"gamma_order", r.gamma_order},
             {"m", r.m}}},
           {"components", components},
           {"dimension_total", r.dimension_total},
           {"verification", suites}};
  return doc.dump(2) + "\n";
}

Report parse_machine(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    Report r;
    const Json& in = doc.at("input");
    in.at("l").get_to(r.l);
    in.at("group").get_to(r.group);
    in.at("gamma").get_to(r.gamma);
    in.at("verify").get_to(r.verify);
    in.at("series_precision").get_to(r.series_precision);
    in.at("report_primes").get_to(r.report_primes);
    in.at("max_order").get_to(r.max_order);
    const Json& g = doc.at("group");
    g.at("order").get_to(r.group_order);
    g.at("class_count").get_to(r.class_count);
    g.at("exponent").get_to(r.exponent);
    g.at("gamma_order").get_to(r.gamma_order);
    g.at("m").get_to(r.m);
    for (const auto& c : doc.at("components")) r.components.push_back(component_from(c));
    doc.at("dimension_total").get_to(r.dimension_total);
    for (const auto& s : doc.at("verification")) {
      r.verification.push_back({s.at("name").get<std::string>(), parse_status(s.at("status").get<std::string>()),
                                s.at("witness").get<std::string>()});
    }
    return r;
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("malformed report: ") + err.what());
  }
}

namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? ", " : "") << xs[i];
  return out.str();
}

std::string field_name(std::int64_t l, int e) {
  return e == 0 ? "Q" : "Q(zeta_" + std::to_string(ipow(l, e)) + ")";
}

}  // namespace

std::string emit_text(const Report& r) {
  std::ostringstream out;
  out << "l = " << r.l << "\n";
  out << "group: " << r.group << ", order " << r.group_order << ", " << r.class_count << " classes, exponent "
      << r.exponent << "\n";
  out << "gamma: " << r.gamma << ", order " << r.gamma_order << " (m = " << r.m << ")\n";
  out << "verify: " << r.verify << ", series precision " << r.series_precision << ", primes [" << join(r.report_primes)
      << "]\n\n";
  out << r.components.size() << " component" << (r.components.size() == 1 ? "" : "s") << ", total dimension "
      << r.dimension_total << " = l^m |H|\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const ComponentDescriptor& d = r.components[i].descriptor;
    const OrbitInvariants& inv = d.invariants;
    out << "\n[" << i + 1 << "] eta = chi_" << inv.representative << ", eta(1) = " << d.eta_degree
        << ", Q(eta) = " << field_name(r.l, inv.eta_exponent) << "\n";
    out << "    values: " << join(r.components[i].representative_values) << "\n";
    out << "    orbit: {" << join(d.orbit) << "}, gamma-orbit: {" << join(inv.gamma_orbit) << "}\n";
    out << "    w = " << inv.w << ", v = " << inv.v << ", chi(1) = " << d.chi_degree << ", s = " << d.schur_index
        << ", n = " << d.matrix_size << ", dim = " << d.dimension << "\n";
    out << "    G_0 = <" << inv.sigma_v << "> = {" << join(inv.g0) << "} mod " << ipow(r.l, inv.eta_exponent)
        << "\n";
    out << "    center: Q^{" << field_name(r.l, d.center_exponent) << "} Gamma^" << d.center_power << "\n";
    if (d.skew_field) {
      const auto& p = *d.skew_field;
      out << "    D = (Q^{" << field_name(r.l, p.maximal_subfield_exponent) << "} Gamma^" << p.gamma_power << " / Q^{"
          << field_name(r.l, p.center_exponent) << "} Gamma^" << p.gamma_power << ", sigma_" << p.sigma_k
          << ", gamma^" << p.gamma_power << ")\n";
    } else {
      out << "    split: M_" << d.matrix_size << " over the center\n";
    }
    for (const auto& c : r.components[i].completions) {
      out << "    at (" << c.prime << "): " << c.completed_center << ", residue " << c.residue_field << " (degree "
          << c.residue_degree << "), cd = " << c.cd << ", SK1 trivial: " << c.sk1_trivial;
      if (!c.irreducibility.empty()) out << ", irreducibility " << c.irreducibility;
      out << "\n";
      if (c.skew) {
        out << "      skew: index " << c.skew->index << ", e = " << c.skew->ramification << ", f = "
            << c.skew->residue_degree << ", residue " << c.skew->residue_polynomial << "\n";
        out << "      N(uniformizer) = " << c.skew->witness_norm << " = (" << c.skew->witness_unit
            << ") * uniformizer, unit valuation " << c.skew->witness_unit_valuation
            << (c.skew->witness_verified ? " (verified)" : " (NOT verified)") << "\n";
      }
    }
  }
  out << "\nverification:\n";
  for (const auto& s : r.verification) {
    out << "  " << s.name << ": " << to_string(s.status);
    if (!s.witness.empty()) out << " (" << s.witness << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace iwasawa
