#include "doctest.h"
#include "gca/catalog.hpp"
#include "gca/configuration.hpp"
#include "gca/error.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

Element el(int i) { return Element::index(static_cast<std::size_t>(i)); }
Element pt(std::int64_t n) { return Element::point({n}); }
const Alphabet A2(2);

Configuration dense(const Group& g, std::vector<Symbol> v, std::size_t q = 2) {
  return Configuration::dense(g, Alphabet(q), std::move(v));
}

}  // namespace

TEST_CASE("shift") {
  const Group z4 = build_cyclic(4);
  const auto x = dense(z4, {1, 0, 0, 0});
  CHECK(shift(el(0), x) == x);
  CHECK(shift(el(1), x).values() == std::vector<Symbol>{0, 1, 0, 0});
  const Group z = Group::free_abelian(1);
  const auto chi = Configuration::finite_support(z, A2, 0, {{{0}, 1}});
  const auto moved = shift(pt(3), chi);
  REQUIRE(moved.kind() == Configuration::Kind::FiniteSupport);
  CHECK(moved.support().support == std::map<Point, Symbol>{{{3}, 1}});
}

TEST_CASE("evaluate") {
  const Group z4 = build_cyclic(4);
  CHECK(evaluate(dense(z4, {1, 0, 0, 0}), el(0)) == 1);
  const Group z = Group::free_abelian(1);
  CHECK(evaluate(Configuration::finite_support(z, A2, 0, {{{2}, 1}}), pt(5)) == 0);
  const auto per = Configuration::periodic(z, A2, {{2}}, {1, 0});
  CHECK(evaluate(per, pt(-3)) == 0);
  CHECK(evaluate(per, pt(-4)) == 1);
}

TEST_CASE("finite support never stores the default") {
  const Group z = Group::free_abelian(1);
  const auto x = Configuration::finite_support(z, A2, 1, {{{0}, 1}, {{1}, 0}});
  CHECK(x.support().support.size() == 1);
  CHECK(x == Configuration::finite_support(z, A2, 1, {{{1}, 0}}));
  CHECK_FALSE(x == Configuration::finite_support(z, A2, 0, {{{1}, 0}}));
}

TEST_CASE("periodic equality is semantic") {
  const Group z2d = Group::free_abelian(2);
  const auto a = Configuration::periodic(z2d, A2, {{2, 0}, {0, 1}}, {1, 0});
  const auto b = Configuration::periodic(z2d, A2, {{4, 0}, {0, 2}}, {1, 0, 1, 0, 1, 0, 1, 0});
  CHECK(a == b);
  CHECK(Configuration::periodic(Group::free_abelian(1), A2, {{3}}, {1, 1, 1}) ==
        Configuration::constant(Group::free_abelian(1), A2, 1));
}

TEST_CASE("restrict") {
  const Group z4 = build_cyclic(4);
  CHECK(restrict(dense(z4, {1, 0, 0, 1}), {}).empty());
  CHECK(restrict(dense(z4, {1, 0, 0, 1}), {el(0), el(1)}) == Pattern{{el(0), 1}, {el(1), 0}});
  const Group z = Group::free_abelian(1);
  const auto chi = Configuration::finite_support(z, A2, 0, {{{0}, 1}});
  CHECK(restrict(chi, {pt(0), pt(1)}) == Pattern{{pt(0), 1}, {pt(1), 0}});
  CHECK_THROWS_AS(restrict(chi, {Element::point({0, 0})}), Error);
}

TEST_CASE("characteristic configurations") {
  const Group z = Group::free_abelian(1);
  const std::vector<Element> window = {pt(-1), pt(0), pt(1)};
  auto one = characteristic_configurations(z, Alphabet(2), pt(0), 1, window);
  REQUIRE(one.patterns.size() == 1);
  CHECK_FALSE(one.complete);
  CHECK(one.patterns[0] == Pattern{{pt(-1), 0}, {pt(0), 1}, {pt(1), 0}});
  auto three = characteristic_configurations(z, Alphabet(3), pt(0), 1, window);
  CHECK(three.patterns.size() == 4);
  for (const auto& p : three.patterns) {
    CHECK(p.at(pt(0)) == 1);
    CHECK(p.at(pt(-1)) != 1);
    CHECK(p.at(pt(1)) != 1);
  }
  const Group z2 = build_cyclic(2);
  auto fin = characteristic_configurations(z2, A2, el(0), 1, z2.elements());
  CHECK(fin.complete);
  REQUIRE(fin.patterns.size() == 1);
  CHECK(fin.patterns[0] == Pattern{{el(0), 1}, {el(1), 0}});
  CHECK_THROWS_AS(characteristic_configurations(z2, A2, el(0), 2, z2.elements()), Error);
}

TEST_CASE("characteristic enumeration matches exhaustive filter") {
  for (const auto& g : small_groups(4))
    for (std::size_t q = 2; q <= 3; ++q)
      for (int gi = 0; gi < static_cast<int>(g.order()); ++gi)
        for (Symbol a = 0; a < q; ++a) {
          std::size_t expected = 0;
          for (const auto& x : oracle::all_configs(g.order(), q)) {
            std::size_t hits = 0;
            for (std::size_t i = 0; i < x.size(); ++i) hits += x[i] == a;
            expected += hits == 1 && x[static_cast<std::size_t>(gi)] == a;
          }
          CHECK(characteristic_configurations(g, Alphabet(q), el(gi), a, g.elements()).patterns.size() == expected);
        }
}

TEST_CASE("translate characteristic") {
  const Group z4 = build_cyclic(4);
  const auto chi = dense(z4, {1, 0, 0, 0});
  CHECK(translate_characteristic(chi, el(0), el(0)) == chi);
  CHECK(translate_characteristic(chi, el(0), el(2)).values() == std::vector<Symbol>{0, 0, 1, 0});
  CHECK_THROWS_AS(translate_characteristic(dense(z4, {1, 1, 0, 0}), el(0), el(2)), Error);
  const Group z = Group::free_abelian(1);
  const auto c = Configuration::finite_support(z, A2, 0, {{{0}, 1}});
  CHECK(translate_characteristic(c, pt(0), pt(5)).support().support == std::map<Point, Symbol>{{{5}, 1}});
}

TEST_CASE("translate characteristic stays characteristic") {
  for (const auto& g : small_groups(6)) {
    const std::size_t n = g.order();
    for (int gi = 0; gi < static_cast<int>(n); ++gi)
      for (const auto& p : characteristic_configurations(g, A2, el(gi), 1, g.elements()).patterns) {
        std::vector<Symbol> v;
        for (const auto& [e, s] : p) v.push_back(s);
        const auto chi = dense(g, v);
        for (int k = 0; k < static_cast<int>(n); ++k)
          CHECK(is_characteristic(translate_characteristic(chi, el(gi), el(k)), el(k), 1));
      }
  }
}

TEST_CASE("fix subgroup") {
  const Group z4 = build_cyclic(4);
  CHECK(fix_subgroup(Subgroup::trivial(z4), A2).size() == 16);
  const auto k = Subgroup::from_elements(z4, {el(0), el(2)});
  const auto fix = fix_subgroup(k, A2);
  CHECK(fix.size() == 4);
  std::size_t filtered = 0;
  for (const auto& x : oracle::all_configs(4, 2)) {
    const auto c = dense(z4, x);
    filtered += shift(el(2), c) == c;
  }
  CHECK(filtered == 4);
  CHECK(fix_subgroup(Subgroup::whole(z4), A2).size() == 2);
  CHECK_THROWS_AS(fix_subgroup(Subgroup::trivial(Group::free_abelian(1)), A2), Error);
}

TEST_CASE("fix subgroup cardinality is q to the index") {
  for (const auto& g : small_groups(8))
    for (const auto& k : all_subgroups(g)) {
      std::size_t expected = 1;
      for (std::size_t i = 0; i < k.index_in_parent(); ++i) expected *= 2;
      const auto fix = fix_subgroup(k, A2);
      CHECK(fix.size() == expected);
      for (const auto& x : fix.members())
        for (int m : k.indices()) CHECK(shift(el(m), dense(g, x)).values() == x);
    }
}

TEST_CASE("shift action law on finite groups") {
  for (const auto& g : small_groups(8)) {
    const int n = static_cast<int>(g.order());
    for (const auto& v : oracle::all_configs(g.order(), 2)) {
      const auto x = dense(g, v);
      CHECK(shift(g.identity(), x) == x);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (!(shift(el(a), shift(el(b), x)) == shift(el(g.mul(a, b)), x))) FAIL("action law");
        }
    }
  }
}

TEST_CASE("shift action is faithful") {
  for (const auto& g : small_groups(8))
    for (int a = 1; a < static_cast<int>(g.order()); ++a) {
      bool moved = false;
      for (const auto& v : oracle::all_configs(g.order(), 2)) {
        const auto x = dense(g, v);
        if (!(shift(el(a), x) == x)) {
          moved = true;
          break;
        }
      }
      CHECK(moved);
    }
}

TEST_CASE("shift action law on Z^2 samples") {
  const Group z2 = Group::free_abelian(2);
  const auto x = Configuration::finite_support(z2, A2, 0, {{{0, 0}, 1}, {{1, -2}, 1}, {{3, 1}, 1}});
  const auto p = Configuration::periodic(z2, A2, {{2, 1}, {0, 3}}, {1, 0, 0, 1, 1, 0});
  for (std::int64_t a = -2; a <= 2; ++a)
    for (std::int64_t b = -2; b <= 2; ++b) {
      const Element g = Element::point({a, b}), h = Element::point({b, a + 1});
      CHECK(shift(g, shift(h, x)) == shift(z2.mul(g, h), x));
      CHECK(shift(g, shift(h, p)) == shift(z2.mul(g, h), p));
      for (std::int64_t i = -3; i <= 3; ++i)
        for (std::int64_t j = -3; j <= 3; ++j) {
          const Element k = Element::point({i, j});
          CHECK(evaluate(shift(g, p), k) == evaluate(p, z2.mul(z2.inverse(g), k)));
        }
    }
}

TEST_CASE("configuration text round trip") {
  const Group z4 = build_cyclic(4);
  const auto x = parse_configuration("dense:[1,0,0,1]", z4, A2);
  CHECK(x.values() == std::vector<Symbol>{1, 0, 0, 1});
  CHECK(format_configuration(x) == "dense:[1,0,0,1]");
  const Group z2 = Group::free_abelian(2);
  const auto s = parse_configuration("support:default=0;{(1,2):1,(0,-1):1}", z2, A2);
  CHECK(evaluate(s, Element::point({1, 2})) == 1);
  CHECK(parse_configuration(format_configuration(s), z2, A2) == s);
  const Group z = Group::free_abelian(1);
  const auto p = parse_configuration("periodic:lattice=[[2]];[1,0]", z, A2);
  CHECK(evaluate(p, pt(-3)) == 0);
  CHECK(parse_configuration(format_configuration(p), z, A2) == p);
  CHECK_THROWS_AS(parse_configuration("dense:[1,0]", z4, A2), Error);
  CHECK_THROWS_AS(parse_configuration("dense:[1,0,2,0]", z4, A2), Error);
  CHECK_THROWS_AS(parse_configuration("nonsense", z4, A2), Error);
}
