#include <random>

#include "doctest.h"
#include "gca/automaton.hpp"
#include "gca/catalog.hpp"
#include "gca/error.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

Element el(int i) { return Element::index(static_cast<std::size_t>(i)); }
const Alphabet A2(2);

LocalRule xor01(const Group& g) { return LocalRule::sum_mod_q(g, A2, {el(0), el(1)}); }

Homomorphism gen_hom(const Group& h, const Group& g, std::vector<int> images) {
  std::vector<Element> e;
  for (int i : images) e.push_back(el(i));
  return Homomorphism::from_generator_images(h, g, e);
}

std::vector<Symbol> run(const Gca& t, const std::vector<Symbol>& x) {
  return apply(t, Configuration::dense(t.source(), t.alphabet(), x)).values();
}

bool realize_same(const Gca& a, const Gca& b) {
  for (const auto& x : oracle::all_configs(a.source().order(), a.alphabet().size()))
    if (run(a, x) != run(b, x)) return false;
  return true;
}

// Random finite GCA with |G|,|H| <= 6, |T| <= 2, q = 2.
struct Sampler {
  std::mt19937 rng{20261014};
  std::vector<Group> groups = small_groups(6);

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

  LocalRule rule(const Group& g) {
    const std::size_t size = below(std::min<std::size_t>(2, g.order()) + 1);
    std::vector<Element> mem;
    while (mem.size() < size) {
      const Element e = el(static_cast<int>(below(g.order())));
      if (std::find(mem.begin(), mem.end(), e) == mem.end()) mem.push_back(e);
    }
    std::vector<Symbol> table(std::size_t{1} << size);
    for (auto& s : table) s = static_cast<Symbol>(below(2));
    return LocalRule(g, A2, mem, table);
  }

  Gca gca(const Group& h, const Group& g) {
    const auto homs = enumerate_homomorphisms(h, g);
    return Gca(homs[below(homs.size())], rule(g));
  }
};

// Intersection of every subset of T that still determines the rule.
std::vector<Element> brute_minimal_memory(const LocalRule& mu) {
  const std::size_t n = mu.memory().size();
  std::size_t common = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t p = 0; p < mu.pattern_count() && ok; ++p)
      for (std::size_t r = 0; r < mu.pattern_count() && ok; ++r) {
        bool agree = true;
        for (std::size_t i = 0; i < n; ++i)
          if (mask >> i & 1) agree = agree && mu.decode(p)[i] == mu.decode(r)[i];
        if (agree && mu(p) != mu(r)) ok = false;
      }
    if (ok) common &= mask;
  }
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i)
    if (common >> i & 1) out.push_back(mu.memory()[i]);
  return out;
}

}  // namespace

TEST_CASE("apply examples") {
  const Group z4 = build_cyclic(4);
  const auto id = identity_gca(z4, A2);
  for (const auto& x : oracle::all_configs(4, 2)) CHECK(run(id, x) == x);
  CHECK(run(Gca(Homomorphism::identity(z4), xor01(z4)), {1, 0, 0, 0}) == std::vector<Symbol>{1, 0, 0, 1});
  const Group z2 = build_cyclic(2);
  CHECK(run(Gca(Homomorphism::trivial(z2, z2), xor01(z2)), {1, 0}) == std::vector<Symbol>{1, 1});
  CHECK_THROWS_AS(apply(id, Configuration::dense(z2, A2, {0, 1})), Error);
  CHECK_THROWS_AS(apply(id, Configuration::dense(z4, Alphabet(3), {0, 1, 2, 0})), Error);
}

TEST_CASE("apply matches the naive evaluator") {
  const auto groups = small_groups(6);
  Sampler s;
  for (const auto& h : groups)
    for (const auto& g : groups)
      for (int rep = 0; rep < 3; ++rep) {
        const Gca t = s.gca(h, g);
        for (const auto& x : oracle::all_configs(g.order(), 2))
          if (run(t, x) != oracle::naive_apply(t, x)) FAIL(h.name() << " " << g.name());
        const auto x = oracle::all_configs(g.order(), 2)[s.below(std::size_t{1} << g.order())];
        const auto cx = Configuration::dense(g, A2, x);
        for (int k = 0; k < static_cast<int>(h.order()); ++k)
          CHECK(reference_evaluate(t, cx, el(k)) == oracle::naive_apply(t, x)[static_cast<std::size_t>(k)]);
      }
}

TEST_CASE("phi-equivariance of apply") {
  Sampler s;
  for (const auto& h : small_groups(6))
    for (const auto& g : small_groups(6)) {
      const Gca t = s.gca(h, g);
      for (const auto& v : oracle::all_configs(g.order(), 2)) {
        const auto x = Configuration::dense(g, A2, v);
        for (int k = 0; k < static_cast<int>(h.order()); ++k)
          if (!(shift(el(k), apply(t, x)) == apply(t, shift(t.phi()(el(k)), x)))) FAIL("equivariance");
      }
    }
}

TEST_CASE("apply on Z windows") {
  const Group z = Group::free_abelian(1);
  const auto twice = Homomorphism::from_matrix(z, z, IntMatrix::from_rows({{2}}));
  const auto per = Configuration::periodic(z, A2, {{2}}, {1, 0});
  std::vector<Element> window;
  for (int n = -5; n <= 5; ++n) window.push_back(Element::point({n}));
  for (const auto& [h, s] : apply_window(pullback(twice, A2), per, window)) CHECK(s == 1);
  const auto x = Configuration::finite_support(z, A2, 0, {{{0}, 1}});
  const Gca t(Homomorphism::identity(z), LocalRule::sum_mod_q(z, A2, {Element::point({0}), Element::point({1})}));
  const auto out = apply_window(t, x, window);
  for (const auto& [h, s] : out) CHECK(s == ((h.coords()[0] == 0 || h.coords()[0] == -1) ? 1 : 0));
  CHECK_THROWS_AS(apply(t, x), Error);
}

TEST_CASE("pullback examples") {
  const Group z4 = build_cyclic(4), z2 = build_cyclic(2);
  CHECK(realize_same(pullback(Homomorphism::identity(z4), A2), identity_gca(z4, A2)));
  const auto phi = gen_hom(z2, z4, {2});
  CHECK(run(pullback(phi, A2), {1, 0, 1, 1}) == std::vector<Symbol>{1, 1});
  CHECK(run(pullback(phi, A2), {0, 1, 1, 0}) == std::vector<Symbol>{0, 1});
}

TEST_CASE("compose examples") {
  const Group z4 = build_cyclic(4);
  const Gca x(Homomorphism::identity(z4), xor01(z4));
  const Gca xx = compose(x, x);
  CHECK(xx.rule().memory() == std::vector<Element>{el(0), el(1), el(2)});
  CHECK(minimal_memory_set(xx) == std::vector<Element>{el(0), el(2)});
  CHECK(xx.rule().canonical() == LocalRule::sum_mod_q(z4, A2, {el(0), el(2)}));
  CHECK(same_map(compose(x, identity_gca(z4, A2)), x));
  CHECK(same_map(compose(identity_gca(z4, A2), x), x));
  CHECK_THROWS_AS(compose(x, identity_gca(build_cyclic(2), A2)), Error);
}

TEST_CASE("pullbacks compose contravariantly") {
  const auto groups = small_groups(4);
  for (const auto& k : groups)
    for (const auto& h : groups)
      for (const auto& g : groups)
        for (const auto& phi : enumerate_homomorphisms(h, g))
          for (const auto& psi : enumerate_homomorphisms(k, h)) {
            const Gca c = compose(pullback(phi, A2), pullback(psi, A2));
            CHECK(realize_same(c, pullback(compose(phi, psi), A2)));
          }
}

TEST_CASE("compose agrees with sequential apply") {
  Sampler s;
  const auto groups = small_groups(4);
  for (int rep = 0; rep < 150; ++rep) {
    const Group& g = groups[s.below(groups.size())];
    const Group& h = groups[s.below(groups.size())];
    const Group& k = groups[s.below(groups.size())];
    const Gca first = s.gca(h, g), second = s.gca(k, h);
    const Gca c = compose(first, second);
    for (const auto& m : c.rule().memory()) {
      bool found = false;
      for (const auto& sm : second.rule().memory())
        for (const auto& t : first.rule().memory()) found = found || g.mul(first.phi()(sm), t) == m;
      CHECK(found);
    }
    for (const auto& x : oracle::all_configs(g.order(), 2)) {
      const auto mid = oracle::naive_apply(first, x);
      if (run(c, x) != oracle::naive_apply(second, mid)) FAIL("compose");
    }
  }
}

TEST_CASE("monoid laws on finite groups") {
  Sampler s;
  for (const auto& g : small_groups(4))
    for (int rep = 0; rep < 10; ++rep) {
      const Gca a = s.gca(g, g), b = s.gca(g, g), c = s.gca(g, g);
      CHECK(realize_same(compose(compose(a, b), c), compose(a, compose(b, c))));
      CHECK(realize_same(compose(a, identity_gca(g, A2)), a));
      CHECK(realize_same(compose(identity_gca(g, A2), a), a));
    }
}

TEST_CASE("factorize") {
  const Group z4 = build_cyclic(4), z2 = build_cyclic(2);
  const auto phi = gen_hom(z2, z4, {2});
  const auto f = factorize(pullback(phi, A2));
  CHECK(realize_same(f.tau, identity_gca(z4, A2)));
  const Gca t(phi, xor01(z4));
  const auto ft = factorize(t);
  CHECK(ft.tau.phi().is_identity());
  CHECK(ft.tau.rule() == xor01(z4));
  CHECK(realize_same(compose(ft.tau, pullback(ft.phi, A2)), t));
  CHECK(minimal_memory_set(t) == minimal_memory_set(ft.tau));
}

TEST_CASE("minimal memory sets") {
  const Group z4 = build_cyclic(4);
  const auto id = Homomorphism::identity(z4);
  CHECK(minimal_memory_set(Gca(id, LocalRule(z4, A2, {el(0), el(1)}, {0, 1, 0, 1}))) == std::vector<Element>{el(0)});
  CHECK(minimal_memory_set(Gca(id, LocalRule::constant(z4, A2, 1, {el(0), el(1)}))).empty());
  CHECK(minimal_memory_set(Gca(id, xor01(z4))) == std::vector<Element>{el(0), el(1)});
}

TEST_CASE("minimal memory matches subset search and realizes the same map") {
  Sampler s;
  for (const auto& g : small_groups(6))
    for (int rep = 0; rep < 8; ++rep) {
      const Gca t = s.gca(g, g);
      auto got = minimal_memory_set(t);
      auto want = brute_minimal_memory(t.rule());
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
      CHECK(realize_same(minimized(t), t));
      std::vector<Element> extra;
      for (const auto& e : g.elements())
        if (std::find(t.rule().memory().begin(), t.rule().memory().end(), e) == t.rule().memory().end()) {
          extra.push_back(e);
          break;
        }
      CHECK(realize_same(Gca(t.phi(), t.rule().extended(extra)), t));
    }
}

TEST_CASE("is_constant") {
  const Group z4 = build_cyclic(4);
  const auto id = Homomorphism::identity(z4);
  CHECK(is_constant(Gca(id, LocalRule::constant(z4, A2, 1, {el(0)}))));
  CHECK_FALSE(is_constant(Gca(id, xor01(z4))));
  CHECK(is_constant(Gca(id, LocalRule(z4, A2, {el(0)}, {0, 0}))));
}

TEST_CASE("injectivity and surjectivity") {
  const Group z4 = build_cyclic(4), z2 = build_cyclic(2);
  auto r = injectivity_surjectivity(identity_gca(z4, A2));
  CHECK(r.injective);
  CHECK(r.surjective);
  r = injectivity_surjectivity(Gca(Homomorphism::identity(z4), xor01(z4)));
  CHECK_FALSE(r.injective);
  CHECK_FALSE(r.surjective);
  r = injectivity_surjectivity(pullback(gen_hom(z4, z2, {1}), A2));
  CHECK(r.injective);
  CHECK_FALSE(r.surjective);
  CHECK_THROWS_AS(injectivity_surjectivity(identity_gca(Group::free_abelian(1), A2)), Error);
}

TEST_CASE("pullback suite on groups of order at most 6") {
  const auto groups = small_groups(6);
  for (const auto& h : groups)
    for (const auto& g : groups) {
      const auto homs = enumerate_homomorphisms(h, g);
      for (const auto& phi : homs) {
        const auto r = injectivity_surjectivity(pullback(phi, A2));
        CHECK(r.injective == phi.is_surjective());
        CHECK(r.surjective == phi.is_injective());
        for (const auto& psi : homs) CHECK(same_map(pullback(phi, A2), pullback(psi, A2)) == (phi == psi));
      }
    }
}

TEST_CASE("same_map on Z") {
  const Group z = Group::free_abelian(1);
  const auto a = Homomorphism::from_matrix(z, z, IntMatrix::from_rows({{2}}));
  const auto b = Homomorphism::from_matrix(z, z, IntMatrix::from_rows({{3}}));
  const auto rule = LocalRule::sum_mod_q(z, A2, {Element::point({0}), Element::point({1})});
  CHECK_FALSE(same_map(Gca(a, rule), Gca(b, rule)));
  CHECK(same_map(Gca(a, LocalRule::constant(z, A2, 1)), Gca(b, LocalRule::constant(z, A2, 1, {Element::point({4})}))));
}
