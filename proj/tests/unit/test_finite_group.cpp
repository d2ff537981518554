#include <set>

#include "doctest.h"
#include "iwasawa/error.hpp"
#include "iwasawa/finite_group.hpp"

using namespace iwasawa;

namespace {

// Conjugacy classes by brute force over all pairs.
std::set<std::set<std::uint32_t>> brute_classes(const FiniteLGroup& g) {
  std::set<std::set<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::set<std::uint32_t> cls;
    for (std::uint32_t y = 0; y < g.order(); ++y) cls.insert(g.mul(g.mul(g.inverse(y), x), y));
    out.insert(cls);
  }
  return out;
}

std::set<std::set<std::uint32_t>> computed_classes(const FiniteLGroup& g) {
  std::set<std::set<std::uint32_t>> out;
  for (const auto& c : g.classes()) out.insert(std::set<std::uint32_t>(c.members.begin(), c.members.end()));
  return out;
}

TableSpec cyclic_table(std::uint32_t n) {
  TableSpec t;
  for (std::uint32_t x = 0; x < n; ++x) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t y = 0; y < n; ++y) row.push_back((x + y) % n);
    t.rows.push_back(row);
  }
  return t;
}

}  // namespace

TEST_CASE("abelian groups") {
  const auto g = build_group(3, AbelianSpec{{9, 3}});
  CHECK(g.order() == 27);
  CHECK(g.exponent() == 9);
  CHECK(g.exponent_log() == 2);
  CHECK(g.is_abelian());
  CHECK(g.generators().size() == 2);
  CHECK(g.element_order(g.generators()[0]) == 9);
  CHECK(g.element_order(g.generators()[1]) == 3);
  CHECK(g.center().size() == 27);
  const auto trivial = build_group(3, AbelianSpec{{}});
  CHECK(trivial.order() == 1);
  CHECK(trivial.class_count() == 1);
}

TEST_CASE("heisenberg group") {
  const auto g = build_group(3, PresetSpec{"heisenberg_3"});
  CHECK(g.order() == 27);
  CHECK(g.exponent() == 3);
  CHECK_FALSE(g.is_abelian());
  CHECK(g.class_count() == 11);
  CHECK(g.center().size() == 3);
  CHECK(computed_classes(g) == brute_classes(g));
  const auto g5 = build_group(5, PresetSpec{"heisenberg_5"});
  CHECK(g5.order() == 125);
  CHECK(g5.class_count() == 5 + 25 - 1);
  CHECK(computed_classes(g5) == brute_classes(g5));
}

TEST_CASE("classes are ordered by least representative") {
  const auto g = build_group(3, PresetSpec{"heisenberg_3"});
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const auto& cls = g.classes()[c];
    CHECK(cls.representative == cls.members.front());
    if (c > 0) CHECK(g.classes()[c - 1].representative < cls.representative);
    for (auto x : cls.members) CHECK(g.class_of(x) == c);
  }
}

TEST_CASE("group construction errors") {
  CHECK_THROWS_AS(build_group(3, AbelianSpec{{6}}), GroupError);
  CHECK_THROWS_AS(build_group(3, PresetSpec{"heisenberg_5"}), GroupError);
  CHECK_THROWS_AS(build_group(3, PresetSpec{"quaternion"}), GroupError);
  CHECK_THROWS_AS(build_group(3, AbelianSpec{{729, 3}}), GroupError);
  CHECK_NOTHROW(build_group(3, AbelianSpec{{729, 3}}, 2187));
  TableSpec bad = cyclic_table(3);
  bad.rows[1][1] = 1;
  CHECK_THROWS_AS(build_group(3, bad), GroupError);
  CHECK_THROWS_AS(build_group(3, cyclic_table(2)), GroupError);
  // Latin square that is not associative: a loop of order 5 from a non-group quasigroup
  TableSpec loop{{{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}};
  CHECK_THROWS_AS(build_group(5, loop), GroupError);
}

TEST_CASE("table groups") {
  const auto g = build_group(3, cyclic_table(9));
  CHECK(g.order() == 9);
  CHECK(g.exponent() == 9);
  CHECK(g.is_abelian());
}

TEST_CASE("words") {
  const auto g = build_group(3, AbelianSpec{{9, 3}});
  const auto g1 = g.generators()[0];
  const auto g2 = g.generators()[1];
  CHECK(evaluate_word(g, "g1^4") == g.power(g1, 4));
  CHECK(evaluate_word(g, "g1*g2^-1") == g.mul(g1, g.inverse(g2)));
  CHECK(evaluate_word(g, "1") == g.identity());
  CHECK_THROWS_AS(evaluate_word(g, "g3"), GroupError);
  CHECK_THROWS_AS(evaluate_word(g, "g1^"), GroupError);
}

TEST_CASE("automorphisms") {
  const auto g = build_group(3, AbelianSpec{{9}});
  const auto gamma = build_automorphism(g, {{0, evaluate_word(g, "g1^4")}});
  CHECK(gamma.order() == 3);
  CHECK(gamma.m() == 1);
  CHECK(gamma.power(3).is_identity());
  CHECK(gamma.power(-1) == gamma.power(2));
  for (std::uint32_t x = 0; x < 9; ++x) CHECK(gamma(x) == g.power(x, 4));
  // 2 has order 6 modulo 9
  CHECK_THROWS_WITH_AS(build_automorphism(g, {{0, evaluate_word(g, "g1^2")}}),
                       "automorphism order 6 is not a power of 3 (G would not be pro-3)", GroupError);
  CHECK_THROWS_AS(build_automorphism(g, {{0, evaluate_word(g, "g1^3")}}), GroupError);
  CHECK(build_automorphism(g, {}).is_identity());
}

TEST_CASE("automorphism orders on C27 agree with multiplicative orders") {
  const auto g = build_group(3, AbelianSpec{{27}});
  for (std::int64_t k = 1; k < 27; k += 3) {
    const auto gamma = build_automorphism(g, {{0, g.power(g.generators()[0], k)}});
    std::int64_t ord = 1;
    for (std::int64_t x = k % 27; x != 1; x = x * k % 27) ++ord;
    CHECK(gamma.order() == ord);
  }
}

TEST_CASE("class permutation of an outer automorphism") {
  const auto g = build_group(3, PresetSpec{"heisenberg_3"});
  const auto gamma = build_automorphism(g, {{0, g.mul(g.generators()[0], g.generators()[1])}});
  CHECK(gamma.order() == 3);
  const auto perm = gamma.class_permutation(g);
  std::set<std::size_t> image(perm.begin(), perm.end());
  CHECK(image.size() == g.class_count());
  CHECK(perm[g.class_of(g.identity())] == g.class_of(g.identity()));
}
