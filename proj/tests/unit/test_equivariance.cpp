#include <set>

#include "doctest.h"
#include "gca/catalog.hpp"
#include "gca/equivariance.hpp"
#include "gca/error.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

Element el(int i) { return Element::index(static_cast<std::size_t>(i)); }
Element pt(std::int64_t n) { return Element::point({n}); }
const Alphabet A2(2);
const Group Z = Group::free_abelian(1);

Homomorphism times(std::int64_t a) { return Homomorphism::from_matrix(Z, Z, IntMatrix::from_rows({{a}})); }

Homomorphism gen_hom(const Group& h, const Group& g, std::vector<int> images) {
  std::vector<Element> e;
  for (int i : images) e.push_back(el(i));
  return Homomorphism::from_generator_images(h, g, e);
}

bool maps_agree(const Gca& a, const Gca& b) {
  for (const auto& x : oracle::all_configs(a.source().order(), a.alphabet().size()))
    if (oracle::naive_apply(a, x) != oracle::naive_apply(b, x)) return false;
  return true;
}

}  // namespace

TEST_CASE("difference sets") {
  const Group z6 = build_cyclic(6);
  const auto id = Homomorphism::identity(z6);
  CHECK(difference_set(id, id).is_trivial());
  const auto d = difference_set(id, gen_hom(z6, z6, {5}));
  CHECK(d.elements == std::vector<Element>{el(0), el(2), el(4)});
  const auto inf = difference_set(times(2), times(3));
  CHECK_FALSE(inf.finite);
  CHECK(*inf.direction == 0);
  CHECK(difference_set(times(2), times(2)).is_trivial());
}

TEST_CASE("difference set is trivial exactly for equal homomorphisms") {
  for (const auto& h : small_groups(6))
    for (const auto& g : small_groups(6)) {
      const auto homs = enumerate_homomorphisms(h, g);
      for (const auto& a : homs)
        for (const auto& b : homs) {
          const auto d = difference_set(a, b);
          CHECK(std::count(d.elements.begin(), d.elements.end(), g.identity()) == 1);
          CHECK(d.is_trivial() == (a == b));
        }
    }
}

TEST_CASE("disjoint translates") {
  CHECK(find_disjoint_translate(Z, pt(2), {pt(0), pt(1)}) == pt(2));
  CHECK(find_disjoint_translate(Z, pt(1), {pt(0)}) == pt(1));
  const Group z2 = Group::free_abelian(2);
  CHECK(find_disjoint_translate(z2, Element::point({0, 1}), {Element::point({0, 0}), Element::point({1, 0})}) ==
        Element::point({0, 1}));
  CHECK(find_disjoint_translate(Z, pt(1), {pt(0), pt(1)}) == pt(2));
  const Group z4 = build_cyclic(4);
  CHECK_FALSE(find_disjoint_translate(z4, z4.elements(), {el(0), el(1), el(2)}).has_value());
  CHECK(find_disjoint_translate(z4, z4.elements(), {el(0), el(1)}) == el(2));
}

TEST_CASE("disjoint multiple stays within the candidate bound") {
  for (std::int64_t v = 1; v <= 4; ++v)
    for (int width = 1; width <= 5; ++width) {
      std::vector<Element> t;
      for (int i = 0; i < width; ++i) t.push_back(pt(i * i - 2));
      const auto n = find_disjoint_multiple(Z, pt(v), t);
      std::set<std::int64_t> base;
      for (const auto& e : t) base.insert(e.coords()[0]);
      for (const auto& e : t) CHECK_FALSE(base.count(e.coords()[0] + n * v));
    }
}

TEST_CASE("equivariance decisions") {
  const Group z2 = build_cyclic(2);
  const auto xor2 = LocalRule::sum_mod_q(z2, A2, {el(0), el(1)});
  const Gca t(Homomorphism::identity(z2), xor2);
  auto v = decide_equivariance(t, Homomorphism::identity(z2));
  CHECK(v.equivariant);
  CHECK(v.method == EquivarianceMethod::IdenticalHomomorphism);
  v = decide_equivariance(t, Homomorphism::trivial(z2, z2));
  CHECK(v.equivariant);
  CHECK(v.method == EquivarianceMethod::Exhaustive);

  const Gca zt(times(2), LocalRule::sum_mod_q(Z, A2, {pt(0), pt(1)}));
  v = decide_equivariance(zt, times(3));
  CHECK_FALSE(v.equivariant);
  CHECK(v.method == EquivarianceMethod::DisjointTranslate);
  REQUIRE(v.witness.has_value());
  CHECK(v.reverified);
  CHECK(v.witness->value_phi != v.witness->value_psi);
  CHECK(reference_evaluate(zt, v.witness->x, v.witness->h) !=
        reference_evaluate(Gca(times(3), zt.rule()), v.witness->x, v.witness->h));
  v = decide_equivariance(Gca(times(2), LocalRule::constant(Z, A2, 1, {pt(0)})), times(3));
  CHECK(v.equivariant);
  CHECK(v.method == EquivarianceMethod::ConstantRule);
}

TEST_CASE("exhaustive verdicts carry genuine witnesses") {
  const auto groups = small_groups(4);
  for (const auto& g : groups) {
    const auto ends = enumerate_endomorphisms(g);
    for (const auto& m : g.elements())
      for (const auto& phi : ends) {
        const Gca t(phi, LocalRule::read_at(g, A2, m));
        for (const auto& psi : ends) {
          const auto v = decide_equivariance(t, psi);
          CHECK(v.equivariant == maps_agree(t, Gca(psi, t.rule())));
          if (!v.equivariant) {
            REQUIRE(v.witness.has_value());
            CHECK(v.reverified);
          }
        }
      }
  }
}

TEST_CASE("uhp scans") {
  const Group z2 = build_cyclic(2);
  auto list = uhp_scan(identity_gca(z2, A2));
  REQUIRE(list.size() == 1);
  CHECK(list[0].is_identity());
  list = uhp_scan(Gca(Homomorphism::identity(z2), LocalRule::sum_mod_q(z2, A2, {el(0), el(1)})));
  CHECK(list.size() == 2);
  list = uhp_scan(Gca(Homomorphism::identity(z2), LocalRule::constant(z2, A2, 0, {el(0)})));
  CHECK(list.size() == 2);
  CHECK_THROWS_AS(uhp_scan(identity_gca(Z, A2)), Error);
}

TEST_CASE("symmetric counterexamples") {
  const Group z2 = build_cyclic(2);
  auto r = symmetric_counterexample(Homomorphism::identity(z2), Homomorphism::trivial(z2, z2), A2);
  REQUIRE(r.exists);
  CHECK(r.verified);
  CHECK(r.tau->rule().memory() == std::vector<Element>{el(0), el(1)});
  const Group z6 = build_cyclic(6);
  r = symmetric_counterexample(Homomorphism::identity(z6), gen_hom(z6, z6, {5}), A2);
  REQUIRE(r.exists);
  CHECK(r.tau->rule().memory() == std::vector<Element>{el(0), el(2), el(4)});
  CHECK(maps_agree(Gca(Homomorphism::identity(z6), r.tau->rule()), Gca(gen_hom(z6, z6, {5}), r.tau->rule())));
  r = symmetric_counterexample(Homomorphism::identity(z6), Homomorphism::identity(z6), A2);
  REQUIRE(r.exists);
  CHECK(r.tau->rule().memory() == std::vector<Element>{el(0)});
  CHECK(same_map(*r.tau, identity_gca(z6, A2)));
  r = symmetric_counterexample(times(2), times(3), A2);
  CHECK_FALSE(r.exists);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("symmetric criterion") {
  const Group z6 = build_cyclic(6);
  const auto psi = gen_hom(z6, z6, {5});
  const Gca t(Homomorphism::identity(z6), LocalRule::sum_mod_q(z6, A2, {el(0), el(2), el(4)}));
  CHECK(symmetric_equivariance_check(t, psi));
  CHECK_FALSE(symmetric_equivariance_check(Gca(times(2), LocalRule::sum_mod_q(Z, A2, {pt(0), pt(1)})), times(3)));
  const Gca left(times(2), LocalRule(Z, A2, {pt(0), pt(1)}, {0, 1, 0, 1}));
  CHECK_FALSE(symmetric_equivariance_check(left, times(2)));
  CHECK(decide_equivariance(left, times(2)).equivariant);
}

TEST_CASE("symmetric criterion never contradicts the exhaustive decision") {
  for (const auto& g : small_groups(6)) {
    const auto ends = enumerate_endomorphisms(g);
    for (const auto& k : all_subgroups(g)) {
      const auto rule = LocalRule::sum_mod_q(g, A2, k.elements());
      for (const auto& phi : ends)
        for (const auto& psi : ends) {
          const Gca t(phi, rule);
          if (symmetric_equivariance_check(t, psi)) CHECK(decide_equivariance(t, psi).equivariant);
        }
    }
  }
}

TEST_CASE("characteristic certificates") {
  const Group z2 = build_cyclic(2);
  auto c = characteristic_uhp_certificate(identity_gca(z2, A2));
  REQUIRE(c.has_value());
  CHECK(c->g == el(0));
  CHECK(c->a == 1);
  CHECK(c->preimage.values() == std::vector<Symbol>{1, 0});
  CHECK_FALSE(characteristic_uhp_certificate(Gca(Homomorphism::identity(z2), LocalRule::constant(z2, A2, 1)))
                  .has_value());
  const Group z4 = build_cyclic(4);
  const Gca x4(Homomorphism::identity(z4), LocalRule::sum_mod_q(z4, A2, {el(0), el(1)}));
  bool expected = false;
  for (const auto& x : oracle::all_configs(4, 2)) {
    const auto y = oracle::naive_apply(x4, x);
    for (Symbol a = 0; a < 2; ++a) expected = expected || std::count(y.begin(), y.end(), a) == 1;
  }
  CHECK(characteristic_uhp_certificate(x4).has_value() == expected);
  CHECK_THROWS_AS(characteristic_uhp_certificate(Gca(Homomorphism::trivial(z4, z4), x4.rule())), Error);
}

TEST_CASE("certificates imply the unique homomorphism property") {
  for (const auto& g : small_groups(4)) {
    const auto ends = enumerate_endomorphisms(g);
    std::vector<LocalRule> rules = {LocalRule::identity(g, A2), LocalRule::sum_mod_q(g, A2, g.elements())};
    if (g.order() >= 2) rules.push_back(LocalRule(g, A2, {el(0), el(1)}, {0, 0, 0, 1}));
    for (const auto& mu : rules) {
      const Gca tau(Homomorphism::identity(g), mu);
      if (!characteristic_uhp_certificate(tau)) continue;
      for (const auto& phi : ends) {
        const auto list = uhp_scan(Gca(phi, mu));
        REQUIRE(list.size() == 1);
        CHECK(list[0] == phi);
      }
    }
  }
}

TEST_CASE("injective automata have the unique homomorphism property") {
  for (const auto& h : small_groups(4))
    for (const auto& g : small_groups(4))
      for (const auto& phi : enumerate_homomorphisms(h, g))
        for (int a = 0; a < static_cast<int>(g.order()); ++a)
          for (int b = 0; b < static_cast<int>(g.order()); ++b) {
            std::vector<Element> mem = {el(a)};
            if (b != a) mem.push_back(el(b));
            const std::size_t patterns = std::size_t{1} << mem.size();
            for (std::size_t code = 0; code < (std::size_t{1} << patterns); ++code) {
              std::vector<Symbol> table(patterns);
              for (std::size_t i = 0; i < patterns; ++i) table[i] = static_cast<Symbol>(code >> i & 1);
              const Gca t(phi, LocalRule(g, A2, mem, table));
              if (!injectivity_surjectivity(t).injective) continue;
              const auto list = uhp_scan(t);
              REQUIRE(list.size() == 1);
              CHECK(list[0] == phi);
            }
          }
}
