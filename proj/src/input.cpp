#include "iwasawa/input.hpp"

#include <charconv>
#include <exception>
#include <set>
#include <sstream>

#include "iwasawa/error.hpp"
#include "iwasawa/rational.hpp"

namespace iwasawa {

namespace {

struct Node {
  std::size_t line = 0;
  std::string key;
  std::string value;
  std::vector<std::size_t> children;
  std::vector<std::pair<std::size_t, std::string>> raw;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

template <typename T>
std::optional<T> parse_int(std::string_view s) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<std::vector<std::string>> parse_list(std::string_view s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') return std::nullopt;
  std::vector<std::string> out;
  std::string inner = trim(std::string_view(t).substr(1, t.size() - 2));
  if (inner.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    auto comma = inner.find(',', pos);
    std::string item = trim(std::string_view(inner).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (item.empty()) return std::nullopt;
    out.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::size_t> max_order) : max_order_(max_order) { build_tree(text); }

  ParseResult run() {
    ParseResult result;
    if (!diags_.empty()) {
      result.diagnostics = std::move(diags_);
      return result;
    }
    InputDocument doc;
    const Node* l_node = nullptr;
    const Node* group_node = nullptr;
    const Node* gamma_node = nullptr;
    const Node* options_node = nullptr;
    std::set<std::string> seen;
    for (std::size_t idx : nodes_[0].children) {
      const Node& n = nodes_[idx];
      if (!seen.insert(n.key).second) {
        diag(n.line, "duplicate key '" + n.key + "'");
        continue;
      }
      if (n.key == "l") l_node = &n;
      else if (n.key == "group") group_node = &n;
      else if (n.key == "gamma") gamma_node = &n;
      else if (n.key == "options") options_node = &n;
      else diag(n.line, "unknown key '" + n.key + "'");
    }
    bool l_ok = false;
    if (!l_node) {
      diag(0, "missing key 'l'");
    } else if (auto v = parse_int<std::int64_t>(l_node->value); !v) {
      diag(l_node->line, "l must be an integer");
    } else if (*v % 2 == 0) {
      diag(l_node->line, "l must be odd");
    } else if (*v < 3 || !is_prime(*v)) {
      diag(l_node->line, "l must be an odd prime");
    } else {
      doc.l = *v;
      l_ok = true;
    }
    bool group_ok = false;
    if (!group_node) diag(0, "missing key 'group'");
    else group_ok = read_group(*group_node, doc.group);
    if (gamma_node) read_gamma(*gamma_node, doc.gamma);
    if (options_node) read_options(*options_node, doc.options);
    if (max_order_) doc.options.max_order = *max_order_;
    if (l_ok) {
      for (const auto& p : doc.options.report_primes) {
        try {
          completion_descriptor(ComponentDescriptor{}, p, doc.l);
        } catch (const AlgebraError& err) {
          diag(options_node ? options_node->line : 0, err.what());
        }
      }
    }

    if (diags_.empty() && l_ok && group_ok) {
      try {
        const FiniteLGroup group = build_group(doc.l, doc.group, doc.options.max_order);
        const bool table_kind = std::holds_alternative<TableSpec>(doc.group);
        if (table_kind && !doc.gamma.words.empty()) {
          diag(gamma_node->line, "table groups take gamma as an explicit permutation");
        } else {
          try {
            build_gamma(group, doc.gamma);
          } catch (const GroupError& err) {
            diag(gamma_node ? gamma_node->line : 0, err.what());
          }
        }
      } catch (const GroupError& err) {
        diag(group_node->line, err.what());
      }
    }
    result.diagnostics = std::move(diags_);
    if (result.diagnostics.empty()) result.document = std::move(doc);
    return result;
  }

 private:
  void diag(std::size_t line, std::string msg) { diags_.push_back({line, std::move(msg)}); }

  void build_tree(std::string_view text) {
    nodes_.push_back(Node{});
    std::vector<std::pair<std::ptrdiff_t, std::size_t>> stack{{-1, 0}};
    std::istringstream in{std::string(text)};
    std::string raw_line;
    std::size_t no = 0;
    while (std::getline(in, raw_line)) {
      ++no;
      if (auto hash = raw_line.find('#'); hash != std::string::npos) raw_line.erase(hash);
      if (trim(raw_line).empty()) continue;
      if (raw_line.find('\t') != std::string::npos) {
        diag(no, "tabs are not allowed; indent with spaces");
        continue;
      }
      const auto indent = static_cast<std::ptrdiff_t>(raw_line.find_first_not_of(' '));
      const std::string body = trim(raw_line);
      while (stack.back().first >= indent) stack.pop_back();
      std::size_t k = 0;
      while (k < body.size() && is_key_char(body[k])) ++k;
      const bool keyed = k > 0 && k < body.size() && body[k] == ':';
      if (keyed) {
        Node n;
        n.line = no;
        n.key = body.substr(0, k);
        n.value = trim(std::string_view(body).substr(k + 1));
        const std::size_t idx = nodes_.size();
        nodes_.push_back(std::move(n));
        nodes_[stack.back().second].children.push_back(idx);
        stack.emplace_back(indent, idx);
      } else if (stack.back().second == 0) {
        diag(no, "expected 'key: value'");
      } else {
        nodes_[stack.back().second].raw.emplace_back(no, body);
      }
    }
  }

  bool reject_raw(const Node& n) {
    if (n.raw.empty()) return true;
    diag(n.raw.front().first, "unexpected line under '" + n.key + "'");
    return false;
  }

  bool read_group(const Node& g, GroupSpec& out) {
    if (!g.value.empty()) {
      diag(g.line, "'group' takes a nested block");
      return false;
    }
    const std::size_t before = diags_.size();
    reject_raw(g);
    const Node* kind = nullptr;
    const Node* invariants = nullptr;
    const Node* name = nullptr;
    const Node* rows = nullptr;
    for (std::size_t idx : g.children) {
      const Node& n = nodes_[idx];
      if (n.key == "kind") kind = &n;
      else if (n.key == "invariants") invariants = &n;
      else if (n.key == "name") name = &n;
      else if (n.key == "rows") rows = &n;
      else diag(n.line, "unknown group key '" + n.key + "'");
    }
    if (!kind) {
      diag(g.line, "group needs a 'kind' (abelian, table or preset)");
      return false;
    }
    if (kind->value == "abelian") {
      if (!invariants) {
        diag(kind->line, "abelian group needs 'invariants: [...]'");
        return false;
      }
      auto items = parse_list(invariants->value);
      if (!items) {
        diag(invariants->line, "invariants must be a list such as [9, 3]");
        return false;
      }
      AbelianSpec spec;
      for (const auto& it : *items) {
        auto v = parse_int<std::int64_t>(it);
        if (!v || *v < 1) {
          diag(invariants->line, "invariant '" + it + "' is not a positive integer");
          return false;
        }
        spec.invariants.push_back(*v);
      }
      out = spec;
    } else if (kind->value == "preset") {
      if (!name || name->value.empty()) {
        diag(kind->line, "preset group needs 'name'");
        return false;
      }
      out = PresetSpec{name->value};
    } else if (kind->value == "table") {
      if (!rows) {
        diag(kind->line, "table group needs a 'rows' block");
        return false;
      }
      TableSpec spec;
      for (const auto& [line, text] : rows->raw) {
        std::vector<std::uint32_t> row;
        std::istringstream ss(text);
        std::string tok;
        while (ss >> tok) {
          auto v = parse_int<std::uint32_t>(tok);
          if (!v) {
            diag(line, "table entry '" + tok + "' is not a non-negative integer");
            return false;
          }
          row.push_back(*v);
        }
        spec.rows.push_back(std::move(row));
      }
      out = spec;
    } else {
      diag(kind->line, "unknown group kind '" + kind->value + "'");
      return false;
    }
    return diags_.size() == before;
  }

  void read_gamma(const Node& g, GammaSpec& out) {
    reject_raw(g);
    if (!g.value.empty() && g.value != "identity") {
      diag(g.line, "'gamma' takes a nested block or 'identity'");
      return;
    }
    for (std::size_t idx : g.children) {
      const Node& n = nodes_[idx];
      reject_raw(n);
      if (n.key == "permutation") {
        auto items = parse_list(n.value);
        if (!items) {
          diag(n.line, "permutation must be a list such as [0, 2, 1]");
          continue;
        }
        for (const auto& it : *items) {
          auto v = parse_int<std::uint32_t>(it);
          if (!v) {
            diag(n.line, "permutation entry '" + it + "' is not a non-negative integer");
            break;
          }
          out.permutation.push_back(*v);
        }
        continue;
      }
      std::optional<std::size_t> gen;
      if (n.key.size() > 1 && n.key[0] == 'g') gen = parse_int<std::size_t>(std::string_view(n.key).substr(1));
      if (!gen || *gen == 0) {
        diag(n.line, "unknown gamma key '" + n.key + "' (expected g1, g2, ... or permutation)");
        continue;
      }
      if (n.value.empty()) {
        diag(n.line, "missing image word for " + n.key);
        continue;
      }
      if (!out.words.emplace(*gen - 1, n.value).second) diag(n.line, "duplicate image for " + n.key);
    }
    if (!out.permutation.empty() && !out.words.empty()) diag(g.line, "gamma takes either words or a permutation, not both");
  }

  void read_options(const Node& o, Options& out) {
    reject_raw(o);
    for (std::size_t idx : o.children) {
      const Node& n = nodes_[idx];
      reject_raw(n);
      if (n.key == "series_precision") {
        auto v = parse_int<std::size_t>(n.value);
        if (!v || *v < 1) diag(n.line, "series_precision must be a positive integer");
        else out.series_precision = *v;
      } else if (n.key == "verify_level") {
        auto v = parse_verify_level(n.value);
        if (!v) diag(n.line, "verify_level must be fast or full");
        else out.verify = *v;
      } else if (n.key == "report_primes") {
        auto items = parse_list(n.value);
        if (!items) {
          diag(n.line, "report_primes must be a list such as [T, ell]");
          continue;
        }
        out.report_primes.clear();
        for (const auto& it : *items) {
          try {
            out.report_primes.push_back(parse_prime(it));
          } catch (const std::exception& err) {
            diag(n.line, err.what());
          }
        }
      } else if (n.key == "max_order") {
        auto v = parse_int<std::size_t>(n.value);
        if (!v || *v < 1) diag(n.line, "max_order must be a positive integer");
        else out.max_order = *v;
      } else {
        diag(n.line, "unknown option '" + n.key + "'");
      }
    }
  }

  std::vector<Node> nodes_;
  std::vector<Diagnostic> diags_;
  std::optional<std::size_t> max_order_;
};

}  // namespace

std::string to_string(VerifyLevel v) { return v == VerifyLevel::full ? "full" : "fast"; }

std::optional<VerifyLevel> parse_verify_level(std::string_view text) {
  if (text == "fast") return VerifyLevel::fast;
  if (text == "full") return VerifyLevel::full;
  return std::nullopt;
}

std::string to_string(const Diagnostic& d) {
  return d.line == 0 ? d.message : "line " + std::to_string(d.line) + ": " + d.message;
}

ParseResult parse_input(std::string_view text, std::optional<std::size_t> max_order_override) {
  try {
    return Parser(text, max_order_override).run();
  } catch (const std::exception& err) {
    ParseResult r;
    r.diagnostics.push_back({0, std::string("internal error: ") + err.what()});
    return r;
  }
}

GroupAutomorphism build_gamma(const FiniteLGroup& group, const GammaSpec& gamma) {
  if (!gamma.permutation.empty()) return automorphism_from_permutation(group, gamma.permutation);
  std::map<std::size_t, FiniteLGroup::Element> images;
  for (const auto& [gen, word] : gamma.words) images[gen] = evaluate_word(group, word);
  return build_automorphism(group, images);
}

std::string describe_group(const GroupSpec& spec) {
  if (const auto* ab = std::get_if<AbelianSpec>(&spec)) {
    std::string out = "abelian [";
    for (std::size_t i = 0; i < ab->invariants.size(); ++i) out += (i ? ", " : "") + std::to_string(ab->invariants[i]);
    return out + "]";
  }
  if (const auto* p = std::get_if<PresetSpec>(&spec)) return "preset " + p->name;
  return "table of order " + std::to_string(std::get<TableSpec>(spec).rows.size());
}

std::string describe_gamma(const GammaSpec& gamma) {
  if (!gamma.permutation.empty()) {
    std::string out = "permutation [";
    for (std::size_t i = 0; i < gamma.permutation.size(); ++i) out += (i ? ", " : "") + std::to_string(gamma.permutation[i]);
    return out + "]";
  }
  if (gamma.words.empty()) return "identity";
  std::string out;
  for (const auto& [gen, word] : gamma.words) {
    if (!out.empty()) out += ", ";
    out += "g" + std::to_string(gen + 1) + " -> " + word;
  }
  return out;
}

}  // namespace iwasawa
