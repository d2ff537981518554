// qg-decompose: Wedderburn decomposition of Q^{Q_l} G for G = H x| Gamma.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "iwasawa/completion.hpp"
#include "iwasawa/error.hpp"
#include "iwasawa/input.hpp"
#include "iwasawa/report.hpp"
#include "iwasawa/run.hpp"

namespace {

using namespace iwasawa;

int report_diagnostics(const std::vector<Diagnostic>& diags, const std::string& path, bool machine) {
  if (machine) {
    nlohmann::ordered_json out{{"diagnostics", nlohmann::ordered_json::array()}};
    for (const auto& d : diags) out["diagnostics"].push_back({{"line", d.line}, {"message", d.message}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& d : diags) {
      std::cerr << path;
      if (d.line) std::cerr << ":" << d.line;
      std::cerr << ": " << d.message << "\n";
    }
  }
  return 1;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decompose Q^{Q_l} G for G = H x| Gamma into simple components"};
  std::string path;
  std::string format = "text";
  std::optional<std::string> verify_level;
  std::optional<std::size_t> precision;
  std::optional<std::string> primes;
  std::optional<std::size_t> max_order;
  app.add_option("input", path, "Input document")->required();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--verify", verify_level, "Verification level")->check(CLI::IsMember({"fast", "full"}));
  app.add_option("--series-precision", precision, "T-adic precision M")->check(CLI::PositiveNumber);
  app.add_option("--primes", primes, "Comma-separated primes: T, ell, f:c0:...:1");
  app.add_option("--max-order", max_order, "Largest accepted |H|")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? 0 : 1;
  }
  const bool machine = format == "machine";

  std::ifstream in(path);
  if (!in) return report_diagnostics({{0, "cannot open input file"}}, path, machine);
  std::stringstream buf;
  buf << in.rdbuf();

  ParseResult parsed = parse_input(buf.str(), max_order);
  if (!parsed.ok()) return report_diagnostics(parsed.diagnostics, path, machine);
  InputDocument doc = *parsed.document;
  if (verify_level) doc.options.verify = *parse_verify_level(*verify_level);
  if (precision) doc.options.series_precision = *precision;
  if (primes) {
    std::vector<Diagnostic> diags;
    doc.options.report_primes.clear();
    for (const auto& label : split_list(*primes)) {
      try {
        PrimeSpec p = parse_prime(label);
        completion_descriptor(ComponentDescriptor{}, p, doc.l);
        doc.options.report_primes.push_back(std::move(p));
      } catch (const AlgebraError& err) {
        diags.push_back({0, std::string("--primes: ") + err.what()});
      }
    }
    if (!diags.empty()) return report_diagnostics(diags, path, machine);
  }

  Report report;
  try {
    report = run(doc);
  } catch (const std::exception& err) {
    return report_diagnostics({{0, err.what()}}, path, machine);
  }
  std::cout << (machine ? emit_machine(report) : emit_text(report));
  const int code = exit_code(report);
  if (code != 0 && !machine) {
    for (const auto& s : report.verification) {
      if (s.status == SuiteStatus::fail) std::cerr << "suite " << s.name << " failed: " << s.witness << "\n";
    }
  }
  return code;
}
