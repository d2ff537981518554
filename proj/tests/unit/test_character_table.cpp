#include "doctest.h"
#include "iwasawa/character_table.hpp"

using namespace iwasawa;

namespace {

void check_orthogonality(const FiniteLGroup& g, const std::vector<Character>& t) {
  REQUIRE(t.size() == g.class_count());
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      const auto ip = inner_product(g, t[i], t[j]);
      CHECK((i == j ? ip.is_one() : ip.is_zero()));
    }
  }
}

}  // namespace

TEST_CASE("class multiplication coefficients agree with brute force") {
  const auto g = build_group(3, PresetSpec{"heisenberg_3"});
  const auto a = class_mult_coefficients(g);
  const std::size_t r = g.class_count();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t weighted = 0;
      for (std::size_t k = 0; k < r; ++k) {
        std::int64_t count = 0;
        const auto target = g.classes()[k].representative;
        for (auto x : g.classes()[i].members) {
          for (auto y : g.classes()[j].members) count += g.mul(x, y) == target;
        }
        CHECK(a(i, j, k) == count);
        weighted += a(i, j, k) * static_cast<std::int64_t>(g.classes()[k].members.size());
      }
      CHECK(weighted == static_cast<std::int64_t>(g.classes()[i].members.size() * g.classes()[j].members.size()));
    }
  }
}

TEST_CASE("C3 table") {
  const auto g = build_group(3, AbelianSpec{{3}});
  const auto t = character_table(g);
  REQUIRE(t.size() == 3);
  const auto w = CyclotomicNumber::zeta_power(3, 1, 1);
  CHECK(t[0].values == std::vector<CyclotomicNumber>(3, CyclotomicNumber::one(3, 1)));
  CHECK(t[0].conductor_exponent == 0);
  for (std::size_t i = 1; i < 3; ++i) CHECK(t[i].conductor_exponent == 1);
  // the two nontrivial characters send the generator to w and w^2
  const auto gen_class = g.class_of(g.generators()[0]);
  CHECK(((t[1].values[gen_class] == w && t[2].values[gen_class] == w * w) ||
         (t[2].values[gen_class] == w && t[1].values[gen_class] == w * w)));
}

TEST_CASE("the two table routes agree on abelian groups") {
  for (const auto& inv : std::vector<std::vector<std::int64_t>>{{9}, {3, 9}, {3, 3, 3}, {27}}) {
    const auto g = build_group(3, AbelianSpec{inv});
    auto a = detail::abelian_table(g);
    auto b = detail::burnside_table(g);
    sort_table(a);
    sort_table(b);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].values == b[i].values);
  }
}

TEST_CASE("lifting prime") {
  const auto g = build_group(3, AbelianSpec{{9}});
  const auto p = detail::lifting_prime(g);
  CHECK(p % 9 == 1);
  CHECK(p > 18);
  CHECK(p == 19);
}

TEST_CASE("non-abelian tables") {
  for (std::int64_t l : {3, 5}) {
    const auto g = build_group(l, PresetSpec{"heisenberg_" + std::to_string(l)});
    const auto t = character_table(g);
    check_orthogonality(g, t);
    std::int64_t sum = 0;
    std::size_t linear = 0;
    for (const auto& chi : t) {
      sum += chi.degree * chi.degree;
      linear += chi.degree == 1;
      CHECK((chi.degree == 1 || chi.degree == l));
    }
    CHECK(sum == l * l * l);
    CHECK(linear == static_cast<std::size_t>(l * l));
    CHECK(t.front().degree == 1);
    for (const auto& v : t.front().values) CHECK(v.is_one());
  }
}

TEST_CASE("table lookup") {
  const auto g = build_group(3, AbelianSpec{{3, 3}});
  const auto t = character_table(g);
  const TableIndex idx(t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(idx.find(t[i]) == i);
    CHECK(find_character(t, t[i]) == i);
  }
  for (std::size_t c = 0; c < g.class_count(); ++c) CHECK(inverse_class(g, inverse_class(g, c)) == c);
}

TEST_CASE("character tables are deterministic") {
  const auto g = build_group(3, PresetSpec{"heisenberg_3"});
  CHECK(character_table(g) == character_table(g));
  const auto t = character_table(g);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i].values == character_table(g)[i].values);
}
