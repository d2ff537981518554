#include "iwasawa/finite_group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>

#include "iwasawa/error.hpp"
#include "iwasawa/rational.hpp"

namespace iwasawa {

namespace {

using Element = FiniteLGroup::Element;

std::size_t checked_order(std::int64_t l, std::int64_t n, std::size_t cap) {
  if (n < 1 || !log_exact(n, l)) {
    throw GroupError("group order " + std::to_string(n) + " is not a power of " + std::to_string(l));
  }
  if (static_cast<std::size_t>(n) > cap) {
    throw GroupError("group order " + std::to_string(n) + " exceeds the size cap " + std::to_string(cap));
  }
  return static_cast<std::size_t>(n);
}

// Elements reachable from `seeds` by right multiplication with seeds.
std::vector<bool> right_closure(const std::vector<Element>& table, std::size_t n, const std::vector<Element>& seeds) {
  std::vector<bool> seen(n, false);
  std::deque<Element> queue;
  for (Element s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : seeds) {
      Element y = table[static_cast<std::size_t>(x) * n + s];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd64(a, b) * b; }

}  // namespace

Element FiniteLGroup::power(Element x, std::int64_t k) const {
  std::int64_t ord = element_order(x);
  k = mod_floor(k, ord);
  Element acc = identity_;
  Element base = x;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::int64_t FiniteLGroup::element_order(Element x) const {
  std::int64_t ord = 1;
  for (Element y = x; y != identity_; y = mul(y, x)) ++ord;
  return ord;
}

std::vector<Element> FiniteLGroup::center() const {
  std::vector<Element> out;
  for (const auto& c : classes_) {
    if (c.members.size() == 1) out.push_back(c.representative);
  }
  return out;
}

void FiniteLGroup::finalize() {
  const std::size_t n = n_;
  if (table_.size() != n * n) throw GroupError("multiplication table must be " + std::to_string(n) + "x" + std::to_string(n));
  for (Element v : table_) {
    if (v >= n) throw GroupError("table entry " + std::to_string(v) + " is out of range");
  }
  // Latin square check
  std::vector<char> seen(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      Element v = table_[x * n + y];
      if (seen[v]) throw GroupError("row " + std::to_string(x) + " repeats element " + std::to_string(v));
      seen[v] = 1;
    }
  }
  for (std::size_t y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      Element v = table_[x * n + y];
      if (seen[v]) throw GroupError("column " + std::to_string(y) + " repeats element " + std::to_string(v));
      seen[v] = 1;
    }
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e * n + x] == x && table_[x * n + e] == x;
    if (ok) {
      identity_ = static_cast<Element>(e);
      found = true;
    }
  }
  if (!found) throw GroupError("table has no identity element");
  inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table_[x * n + y] == identity_) inverse_[x] = static_cast<Element>(y);
    }
    if (table_[inverse_[x] * n + x] != identity_) throw GroupError("element " + std::to_string(x) + " has no two-sided inverse");
  }

  // Light's test: associativity against a generating set suffices.
  std::vector<Element> gens;
  std::vector<bool> reach = right_closure(table_, n, {identity_});
  for (std::size_t x = 0; x < n; ++x) {
    if (reach[x]) continue;
    gens.push_back(static_cast<Element>(x));
    std::vector<Element> seeds = gens;
    seeds.push_back(identity_);
    reach = right_closure(table_, n, seeds);
  }
  for (Element a : gens) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (mul(mul(x, y), a) != mul(x, mul(y, a))) {
          throw GroupError("table is not associative at (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
                           std::to_string(a) + ")");
        }
      }
    }
  }
  if (generators_.empty()) generators_ = gens;

  std::int64_t ex = 1;
  for (std::size_t x = 0; x < n; ++x) ex = lcm64(ex, element_order(static_cast<Element>(x)));
  exponent_ = ex;
  auto el = log_exact(ex, l_);
  if (!el) throw GroupError("group exponent " + std::to_string(ex) + " is not a power of " + std::to_string(l_));
  exponent_log_ = *el;

  // Conjugation orbits under the generators.
  const std::vector<Element> conj = gens;
  class_of_.assign(n, static_cast<std::size_t>(-1));
  classes_.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != static_cast<std::size_t>(-1)) continue;
    std::size_t idx = classes_.size();
    ConjugacyClass cls{static_cast<Element>(x), {static_cast<Element>(x)}};
    class_of_[x] = idx;
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      Element y = cls.members[i];
      for (Element g : conj) {
        Element z = mul(mul(g, y), inverse_[g]);
        if (class_of_[z] == static_cast<std::size_t>(-1)) {
          class_of_[z] = idx;
          cls.members.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

FiniteLGroup build_group(std::int64_t l, const GroupSpec& spec, std::size_t order_cap) {
  if (l < 3 || !is_prime(l)) throw GroupError("l must be an odd prime");
  FiniteLGroup g;
  g.l_ = l;
  if (const auto* ab = std::get_if<AbelianSpec>(&spec)) {
    std::int64_t n = 1;
    for (std::int64_t q : ab->invariants) {
      if (q < 1 || !log_exact(q, l)) {
        throw GroupError("invariant " + std::to_string(q) + " is not a power of " + std::to_string(l));
      }
      if (n > static_cast<std::int64_t>(order_cap)) break;
      n *= q;
    }
    g.n_ = checked_order(l, n, order_cap);
    const auto& inv = ab->invariants;
    auto digits = [&](std::size_t x) {
      std::vector<std::int64_t> d(inv.size());
      for (std::size_t i = 0; i < inv.size(); ++i) {
        d[i] = static_cast<std::int64_t>(x) % inv[i];
        x /= static_cast<std::size_t>(inv[i]);
      }
      return d;
    };
    auto index = [&](const std::vector<std::int64_t>& d) {
      std::size_t x = 0;
      for (std::size_t i = inv.size(); i-- > 0;) x = x * static_cast<std::size_t>(inv[i]) + static_cast<std::size_t>(d[i]);
      return static_cast<Element>(x);
    };
    g.table_.resize(g.n_ * g.n_);
    for (std::size_t x = 0; x < g.n_; ++x) {
      auto dx = digits(x);
      for (std::size_t y = 0; y < g.n_; ++y) {
        auto dy = digits(y);
        for (std::size_t i = 0; i < inv.size(); ++i) dy[i] = (dx[i] + dy[i]) % inv[i];
        g.table_[x * g.n_ + y] = index(dy);
      }
    }
    std::size_t stride = 1;
    for (std::int64_t q : inv) {
      g.generators_.push_back(static_cast<Element>(q == 1 ? 0 : stride));
      stride *= static_cast<std::size_t>(q);
    }
    g.description_ = "abelian [";
    for (std::size_t i = 0; i < inv.size(); ++i) g.description_ += (i ? ", " : "") + std::to_string(inv[i]);
    g.description_ += "]";
  } else if (const auto* tb = std::get_if<TableSpec>(&spec)) {
    g.n_ = checked_order(l, static_cast<std::int64_t>(tb->rows.size()), order_cap);
    g.table_.reserve(g.n_ * g.n_);
    for (std::size_t r = 0; r < tb->rows.size(); ++r) {
      if (tb->rows[r].size() != g.n_) {
        throw GroupError("table row " + std::to_string(r) + " has " + std::to_string(tb->rows[r].size()) +
                         " entries, expected " + std::to_string(g.n_));
      }
      g.table_.insert(g.table_.end(), tb->rows[r].begin(), tb->rows[r].end());
    }
    g.description_ = "table of order " + std::to_string(g.n_);
  } else {
    const auto& name = std::get<PresetSpec>(spec).name;
    const std::string prefix = "heisenberg_";
    std::int64_t p = 0;
    if (name.rfind(prefix, 0) != 0 ||
        std::from_chars(name.data() + prefix.size(), name.data() + name.size(), p).ec != std::errc{}) {
      throw GroupError("unknown preset '" + name + "'");
    }
    if (p != l) throw GroupError("preset " + name + " does not match l = " + std::to_string(l));
    g.n_ = checked_order(l, l * l * l, order_cap);
    const std::size_t q = static_cast<std::size_t>(l);
    g.table_.resize(g.n_ * g.n_);
    for (std::size_t x = 0; x < g.n_; ++x) {
      std::size_t a = x % q, b = x / q % q, c = x / (q * q);
      for (std::size_t y = 0; y < g.n_; ++y) {
        std::size_t a2 = y % q, b2 = y / q % q, c2 = y / (q * q);
        std::size_t ra = (a + a2) % q, rb = (b + b2) % q, rc = (c + c2 + a * b2) % q;
        g.table_[x * g.n_ + y] = static_cast<Element>(ra + q * rb + q * q * rc);
      }
    }
    g.generators_ = {1, static_cast<Element>(q)};
    g.description_ = name;
  }
  g.finalize();
  return g;
}

const std::vector<ConjugacyClass>& conjugacy_classes(const FiniteLGroup& group) { return group.classes(); }

Element evaluate_word(const FiniteLGroup& group, std::string_view word) {
  Element acc = group.identity();
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < word.size() && (word[i] == ' ' || word[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& why) -> Element {
    throw GroupError("bad word '" + std::string(word) + "': " + why);
  };
  auto read_int = [&](std::int64_t& out) {
    const char* b = word.data() + i;
    auto [ptr, ec] = std::from_chars(b, word.data() + word.size(), out);
    if (ec != std::errc{}) fail("expected an integer");
    i += static_cast<std::size_t>(ptr - b);
  };
  skip_ws();
  if (i == word.size()) fail("empty");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == word.size()) break;
    if (!first) {
      if (word[i] != '*') fail("expected '*'");
      ++i;
      skip_ws();
    }
    first = false;
    Element factor;
    if (i < word.size() && (word[i] == '1' || word[i] == 'e')) {
      ++i;
      factor = group.identity();
    } else if (i < word.size() && word[i] == 'g') {
      ++i;
      std::int64_t idx = 0;
      read_int(idx);
      if (idx < 1 || static_cast<std::size_t>(idx) > group.generators().size()) {
        fail("unknown generator g" + std::to_string(idx));
      }
      factor = group.generators()[static_cast<std::size_t>(idx - 1)];
    } else {
      return fail("expected a generator");
    }
    skip_ws();
    if (i < word.size() && word[i] == '^') {
      ++i;
      skip_ws();
      std::int64_t k = 0;
      read_int(k);
      factor = group.power(factor, k);
    }
    acc = group.mul(acc, factor);
  }
  return acc;
}

GroupAutomorphism GroupAutomorphism::power(std::int64_t j) const {
  j = mod_floor(j, order_);
  std::vector<Element> out(perm_.size());
  std::iota(out.begin(), out.end(), Element{0});
  for (std::int64_t t = 0; t < j; ++t) {
    for (auto& x : out) x = perm_[x];
  }
  std::int64_t ord = order_ / gcd64(order_, j);
  return GroupAutomorphism(std::move(out), ord, ord == 1 ? 0 : *log_exact(ord, l_), l_);
}

std::vector<std::size_t> GroupAutomorphism::class_permutation(const FiniteLGroup& group) const {
  std::vector<std::size_t> out(group.class_count());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = group.class_of(perm_[group.classes()[c].representative]);
  return out;
}

GroupAutomorphism automorphism_from_permutation(const FiniteLGroup& group, std::vector<Element> perm) {
  const std::size_t n = group.order();
  if (perm.size() != n) {
    throw GroupError("automorphism has " + std::to_string(perm.size()) + " images, expected " + std::to_string(n));
  }
  std::vector<char> hit(n, 0);
  for (Element x : perm) {
    if (x >= n) throw GroupError("automorphism image " + std::to_string(x) + " is out of range");
    if (hit[x]) throw GroupError("automorphism is not bijective");
    hit[x] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (perm[group.mul(x, y)] != group.mul(perm[x], perm[y])) {
        throw GroupError("map is not a homomorphism at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
      }
    }
  }
  std::int64_t ord = 1;
  std::vector<char> done(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::int64_t len = 0;
    for (std::size_t y = x; !done[y]; y = perm[y]) {
      done[y] = 1;
      ++len;
    }
    ord = lcm64(ord, len);
  }
  auto m = log_exact(ord, group.prime());
  if (!m) {
    throw GroupError("automorphism order " + std::to_string(ord) + " is not a power of " +
                     std::to_string(group.prime()) + " (G would not be pro-" + std::to_string(group.prime()) + ")");
  }
  return GroupAutomorphism(std::move(perm), ord, *m, group.prime());
}

GroupAutomorphism build_automorphism(const FiniteLGroup& group, const std::map<std::size_t, Element>& images) {
  const std::size_t n = group.order();
  const auto& gens = group.generators();
  std::vector<Element> img(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) img[i] = gens[i];
  for (const auto& [i, x] : images) {
    if (i >= gens.size()) throw GroupError("unknown generator g" + std::to_string(i + 1));
    if (x >= n) throw GroupError("image " + std::to_string(x) + " is out of range");
    img[i] = x;
  }
  constexpr Element kUnset = static_cast<Element>(-1);
  std::vector<Element> perm(n, kUnset);
  perm[group.identity()] = group.identity();
  std::deque<Element> queue{group.identity()};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = group.mul(x, gens[i]);
      Element fy = group.mul(perm[x], img[i]);
      if (perm[y] == kUnset) {
        perm[y] = fy;
        queue.push_back(y);
      } else if (perm[y] != fy) {
        throw GroupError("generator images do not extend to a homomorphism");
      }
    }
  }
  for (Element v : perm) {
    if (v == kUnset) throw GroupError("generators do not generate the group");
  }
  return automorphism_from_permutation(group, std::move(perm));
}

}  // namespace iwasawa
