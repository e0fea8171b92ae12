#include "doctest.h"
#include "gca/catalog.hpp"
#include "gca/error.hpp"
#include "gca/structure.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

Element el(int i) { return Element::index(static_cast<std::size_t>(i)); }
const Alphabet A2(2);

Homomorphism gen_hom(const Group& h, const Group& g, std::vector<int> images) {
  std::vector<Element> e;
  for (int i : images) e.push_back(el(i));
  return Homomorphism::from_generator_images(h, g, e);
}

std::vector<Symbol> run(const Gca& t, const std::vector<Symbol>& x) {
  return DenseEvaluator(t)(x);
}

}  // namespace

TEST_CASE("fix invariance") {
  const Group z4 = build_cyclic(4);
  const auto id = Homomorphism::identity(z4);
  const Subgroup k = Subgroup::from_elements(z4, {el(0), el(2)});
  const auto xr = LocalRule::sum_mod_q(z4, A2, {el(0), el(1)});
  CHECK(invariance_check(Gca(id, xr), Subgroup::trivial(z4)));
  CHECK(invariance_check(Gca(id, xr), k));
  const auto twice = gen_hom(z4, z4, {2});
  for (const auto& rule : minimal_rules(z4, A2, z4.elements(), 2)) CHECK(invariance_check(Gca(twice, rule), k));
  const Group v4 = direct_product(build_cyclic(2), build_cyclic(2));
  CHECK_THROWS_AS(invariance_check(Gca(gen_hom(v4, v4, {2, 1}), LocalRule::identity(v4, A2)),
                                   Subgroup::from_elements(v4, {el(0), el(2)})),
                  Error);
}

TEST_CASE("minimal rule enumeration") {
  const Group z4 = build_cyclic(4);
  // 2 constants, 2 per single cell, 10 per pair.
  CHECK(minimal_rules(z4, A2, z4.elements(), 2).size() == 2 + 4 * 2 + 6 * 10);
  CHECK(minimal_rules(z4, A2, {el(0)}, 2).size() == 4);
  for (const auto& r : minimal_rules(z4, A2, z4.elements(), 2)) CHECK(r == r.canonical());
}

TEST_CASE("quotient examples") {
  const Group z4 = build_cyclic(4);
  const Subgroup n = Subgroup::from_elements(z4, {el(0), el(2)});
  auto p = quotient_gca(identity_gca(z4, A2), n);
  CHECK(p.diagram_verified);
  CHECK(same_map(p.quotient_gca, identity_gca(p.quotient.group, A2)));
  p = quotient_gca(Gca(Homomorphism::identity(z4), LocalRule::sum_mod_q(z4, A2, {el(0), el(1)})), n);
  CHECK(p.quotient_gca.rule().canonical() == LocalRule::sum_mod_q(p.quotient.group, A2, {el(0), el(1)}));
  CHECK(p.quotient_gca.phi().is_identity());
  p = quotient_gca(Gca(Homomorphism::identity(z4), LocalRule::constant(z4, A2, 1, {el(1)})), n);
  CHECK(p.quotient_gca.rule().is_constant());
  CHECK(p.quotient_gca.rule()(std::size_t{0}) == 1);
  const Group s3 = build_symmetric(3);
  const int swap01 = static_cast<int>(permutation_index({1, 0, 2}));
  CHECK_THROWS_AS(quotient_gca(identity_gca(s3, A2), Subgroup::generated_by(s3, {el(swap01)})), Error);
}

TEST_CASE("quotient rule matches the direct formula and is unique") {
  for (const auto& g : small_groups(6))
    for (const auto& n : normal_subgroups(g)) {
      const auto q = quotient_group(g, n);
      for (const auto& phi : enumerate_endomorphisms(g)) {
        if (!is_invariant_under(n, phi)) continue;
        for (const auto& rule : minimal_rules(g, A2, g.elements(), 2)) {
          const Gca t(phi, rule);
          const auto p = quotient_gca(t, n, q);
          // hat(y)(c) = mu(t -> y(rho(phi(c~) t))) for any representative c~.
          const auto configs = oracle::all_configs(q.group.order(), 2);
          for (const auto& y : configs) {
            const auto got = run(p.quotient_gca, y);
            for (int c = 0; c < static_cast<int>(q.group.order()); ++c) {
              const int rep = q.representatives[static_cast<std::size_t>(c)];
              std::size_t index = 0;
              for (std::size_t i = 0; i < rule.memory().size(); ++i) {
                const int cell = g.mul(phi(rep), static_cast<int>(rule.memory()[i].as_index()));
                index |= std::size_t{y[static_cast<std::size_t>(q.projection(cell))]} << i;
              }
              if (got[static_cast<std::size_t>(c)] != rule(index)) FAIL("quotient formula");
            }
          }
        }
      }
    }
}

TEST_CASE("any automaton on the quotient making the diagram commute is the constructed one") {
  for (const auto& g : small_groups(6))
    for (const auto& n : normal_subgroups(g)) {
      if (n.order() == 1) continue;
      const auto q = quotient_group(g, n);
      const auto id = Homomorphism::identity(g);
      for (const auto& rule : minimal_rules(g, A2, g.elements(), 1)) {
        const Gca t(id, rule);
        const auto hat = quotient_gca(t, n, q).quotient_gca;
        // Candidates: every rule table over every memory set of size <= 2 in G/N.
        const auto candidates = minimal_rules(q.group, A2, q.group.elements(), 2);
        std::size_t commuting = 0;
        for (const auto& c : candidates) {
          const Gca s(Homomorphism::identity(q.group), c);
          bool ok = true;
          for (const auto& y : oracle::all_configs(q.group.order(), 2)) {
            std::vector<Symbol> x(g.order()), sx(g.order());
            const auto sy = run(s, y);
            for (std::size_t i = 0; i < x.size(); ++i) {
              x[i] = y[static_cast<std::size_t>(q.projection(static_cast<int>(i)))];
              sx[i] = sy[static_cast<std::size_t>(q.projection(static_cast<int>(i)))];
            }
            ok = ok && run(t, x) == sx;
          }
          if (ok) {
            ++commuting;
            CHECK(same_map(s, hat));
          }
        }
        CHECK(commuting == 1);
      }
    }
}

TEST_CASE("quotient functoriality") {
  const Group z4 = build_cyclic(4);
  const Subgroup n = Subgroup::from_elements(z4, {el(0), el(2)});
  const auto id = Homomorphism::identity(z4);
  CHECK(quotient_functoriality_check(z4, n, {identity_gca(z4, A2)}));
  const Gca xr(id, LocalRule::sum_mod_q(z4, A2, {el(0), el(1)}));
  const Gca sh(id, LocalRule::read_at(z4, A2, el(1)));
  CHECK(quotient_functoriality_check(z4, n, {xr, sh}));
  CHECK(quotient_functoriality_check(z4, n, {xr, sh, Gca(gen_hom(z4, z4, {2}), LocalRule::read_at(z4, A2, el(1)))}));
  const Group v4 = direct_product(build_cyclic(2), build_cyclic(2));
  CHECK_THROWS_AS(quotient_functoriality_check(v4, Subgroup::from_elements(v4, {el(0), el(2)}), {}), Error);
}

TEST_CASE("restriction examples") {
  const Group z4 = build_cyclic(4);
  const auto id = Homomorphism::identity(z4);
  const Subgroup k = Subgroup::from_elements(z4, {el(0), el(2)});
  const Gca t(id, LocalRule::sum_mod_q(z4, A2, {el(0), el(2)}));
  const auto p = restrict(t, k);
  CHECK(p.diagram_verified);
  CHECK(p.restricted.rule().memory() == std::vector<Element>{el(0), el(1)});
  CHECK(p.restricted.source().order() == 2);
  CHECK_THROWS_AS(restrict(Gca(id, LocalRule::read_at(z4, A2, el(1))), k), Error);
  const auto whole = restrict(t, Subgroup::whole(z4));
  CHECK(same_map(whole.restricted, t));

  const Group z = Group::free_abelian(1);
  const Subgroup even = Subgroup::generated_by(z, {Element::point({2})});
  const Gca tz(Homomorphism::identity(z),
               LocalRule::sum_mod_q(z, A2, {Element::point({0}), Element::point({2})}));
  const auto pz = restrict(tz, even);
  CHECK(pz.restricted.rule().memory() == std::vector<Element>{Element::point({0}), Element::point({1})});
  std::vector<Element> window;
  for (int i = -4; i <= 4; ++i) window.push_back(Element::point({i}));
  const std::vector<Configuration> inputs = {
      Configuration::finite_support(z, A2, 0, {{{0}, 1}}),
      Configuration::finite_support(z, A2, 1, {{{3}, 0}, {{4}, 0}, {{-2}, 0}}),
      Configuration::finite_support(z, A2, 0, {{{1}, 1}, {{2}, 1}, {{6}, 1}}),
  };
  CHECK(restriction_window_check(pz, inputs, window));
}

TEST_CASE("restriction and induction round trips") {
  for (const auto& h : small_groups(4))
    for (const auto& g : small_groups(4))
      for (const auto& phi : enumerate_homomorphisms(h, g))
        for (const auto& k : all_subgroups(h)) {
          const Subgroup img = image(phi, k);
          for (const auto& rule : minimal_rules(g, A2, img.elements(), 2)) {
            const Gca t(phi, rule);
            const auto p = restrict(t, k);
            CHECK(p.diagram_verified);
            CHECK(same_map(induce(p.restricted, k, phi), t));
            const Gca s(p.restricted.phi(), LocalRule(img.as_group(), A2, p.restricted.rule().memory(),
                                                       p.restricted.rule().table()));
            CHECK(same_map(restrict(induce(s, k, phi), k).restricted, s));
          }
        }
}

TEST_CASE("induction of the identity rule is the pullback") {
  const Group z4 = build_cyclic(4), z2 = build_cyclic(2);
  const auto phi = gen_hom(z2, z4, {2});
  const Subgroup k = Subgroup::whole(z2);
  const Subgroup img = image(phi, k);
  const Gca s(restrict_homomorphism(phi, k, img), LocalRule::identity(img.as_group(), A2));
  CHECK(same_map(induce(s, k, phi), pullback(phi, A2)));
  const Gca wrong(Homomorphism::trivial(k.as_group(), img.as_group()), LocalRule::identity(img.as_group(), A2));
  CHECK_THROWS_AS(induce(wrong, k, phi), Error);
}

TEST_CASE("restriction of compositions") {
  const Group z4 = build_cyclic(4);
  const auto id = Homomorphism::identity(z4);
  const Subgroup k = Subgroup::from_elements(z4, {el(0), el(2)});
  CHECK(restriction_composition_check(identity_gca(z4, A2), identity_gca(z4, A2), k));
  const Gca x02(id, LocalRule::sum_mod_q(z4, A2, {el(0), el(2)}));
  CHECK(restriction_composition_check(x02, x02, k));
  const auto twice = gen_hom(z4, z4, {2});
  const Gca r0(twice, LocalRule::identity(z4, A2));
  const Gca r0b(twice, LocalRule(z4, A2, {el(0)}, {1, 0}));
  CHECK(restriction_composition_check(r0, r0b, Subgroup::whole(z4)));
  CHECK_THROWS_AS(restriction_composition_check(Gca(id, LocalRule::read_at(z4, A2, el(1))), x02, k), Error);
}

TEST_CASE("transfer examples") {
  const Group z4 = build_cyclic(4), z2 = build_cyclic(2);
  auto r = transfer_theorem_check(identity_gca(z4, A2), Subgroup::whole(z4));
  CHECK(r.injective);
  CHECK(r.surjective);
  CHECK(r.restricted_injective);
  CHECK(r.phi_surjective);
  const auto mod2 = gen_hom(z4, z2, {1});
  r = transfer_theorem_check(pullback(mod2, A2), Subgroup::whole(z4));
  CHECK(r.injective);
  CHECK(r.restricted_injective);
  CHECK(r.phi_surjective);
  CHECK_FALSE(r.phi_injective);
  const Subgroup k = Subgroup::from_elements(z4, {el(0), el(2)});
  r = transfer_theorem_check(Gca(Homomorphism::identity(z4), LocalRule::sum_mod_q(z4, A2, {el(0), el(2)})), k);
  CHECK_FALSE(r.injective);
  CHECK((!r.restricted_injective || !r.phi_surjective));
  CHECK(r.restricted_pullback_injective);
}

TEST_CASE("submonoid characterization examples") {
  const Group z4 = build_cyclic(4);
  auto r = gca_submonoid_check(z4, Subgroup::from_elements(z4, {el(0), el(2)}), 2, A2);
  CHECK(r.fully_invariant);
  CHECK(r.closed);
  CHECK(r.compositions > 0);
  const Group s3 = build_symmetric(3);
  const int swap01 = static_cast<int>(permutation_index({1, 0, 2}));
  r = gca_submonoid_check(s3, Subgroup::generated_by(s3, {el(swap01)}), 2, A2);
  CHECK_FALSE(r.fully_invariant);
  CHECK_FALSE(r.closed);
  CHECK(r.escape.has_value());
  r = gca_submonoid_check(s3, Subgroup::whole(s3), 2, A2);
  CHECK(r.closed);
  CHECK(r.agree());
  CHECK_THROWS_AS(gca_submonoid_check(s3, Subgroup::whole(s3), 2, A2, 10), Error);
}

TEST_CASE("surjectivity experiment tallies every instance") {
  const Group z2 = build_cyclic(2);
  const auto t = surjectivity_experiment(z2, z2, 2, A2);
  CHECK(t.instances == t.counts[0][0] + t.counts[0][1] + t.counts[1][0] + t.counts[1][1]);
  CHECK(t.instances > 0);
}
