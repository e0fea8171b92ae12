#include <algorithm>

#include "doctest.h"
#include "gca/catalog.hpp"
#include "gca/error.hpp"
#include "gca/homomorphism.hpp"
#include "gca/subgroup.hpp"
#include "oracles.hpp"

using namespace gca;

namespace {

Element el(int i) { return Element::index(static_cast<std::size_t>(i)); }

Homomorphism gen_hom(const Group& h, const Group& g, std::vector<int> images) {
  std::vector<Element> e;
  for (int i : images) e.push_back(el(i));
  return Homomorphism::from_generator_images(h, g, e);
}

std::size_t order_by_repetition(const Group& g, int a) {
  std::size_t k = 1;
  for (int x = a; x != g.identity_index(); x = g.mul(x, a)) ++k;
  return k;
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(build_cyclic(1).order() == 1);
  const Group z4 = build_cyclic(4);
  CHECK(z4.mul(1, 3) == 0);
  const Group z6 = build_cyclic(6);
  CHECK(z6.element_order(5) == 6);
  CHECK(order_by_repetition(z6, 5) == 6);
  CHECK_THROWS_AS(build_cyclic(0), Error);
}

TEST_CASE("cayley table validation") {
  // Latin square with identity 0 but (1*1)*2 != 1*(1*2).
  std::vector<int> bad = {0, 1, 2, 3, 4,  //
                          1, 0, 3, 4, 2,  //
                          2, 4, 0, 1, 3,  //
                          3, 2, 4, 0, 1,  //
                          4, 3, 1, 2, 0};
  try {
    Group::from_table("bad", 5, bad);
    FAIL("accepted a non-associative table");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("associat") != std::string::npos);
  }
  CHECK_THROWS_AS(Group::from_table("x", 2, {0, 1, 1, 1}), Error);
}

TEST_CASE("element orders agree with repetition in small groups") {
  for (const auto& g : small_groups(8))
    for (int a = 0; a < static_cast<int>(g.order()); ++a) CHECK(g.element_order(a) == order_by_repetition(g, a));
}

TEST_CASE("small group catalogue") {
  const auto groups = small_groups(8);
  CHECK(groups.size() == 14);
  std::size_t abelian = 0;
  for (const auto& g : groups) abelian += g.is_abelian();
  CHECK(abelian == 11);
}

TEST_CASE("homomorphism enumeration examples") {
  const Group z2 = build_cyclic(2), z3 = build_cyclic(3), z4 = build_cyclic(4);
  auto homs = enumerate_homomorphisms(z2, z4);
  REQUIRE(homs.size() == 2);
  CHECK(homs[0].is_trivial());
  CHECK(homs[1](1) == 2);
  CHECK(enumerate_homomorphisms(z3, z4).size() == 1);
  auto to_z = enumerate_homomorphisms(z2, Group::free_abelian(1));
  REQUIRE(to_z.size() == 1);
  CHECK(to_z[0].is_trivial());
  CHECK(enumerate_endomorphisms(z4).size() == 4);
  CHECK(enumerate_endomorphisms(z2).size() == 2);
  CHECK(enumerate_endomorphisms(build_cyclic(1)).size() == 1);
  CHECK_THROWS_AS(enumerate_homomorphisms(Group::free_abelian(1), Group::free_abelian(1)), Error);
  try {
    gen_hom(z2, z4, {1});
    FAIL("1->1 accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("order") != std::string::npos);
  }
}

TEST_CASE("homomorphism enumeration matches the all-functions filter") {
  const auto groups = small_groups(6);
  for (const auto& h : groups)
    for (const auto& g : groups) {
      const auto homs = enumerate_homomorphisms(h, g);
      auto expected = oracle::all_function_homs(h, g);
      std::vector<std::vector<int>> got;
      for (const auto& f : homs) got.push_back(f.index_table());
      std::sort(expected.begin(), expected.end());
      CHECK_MESSAGE(got == expected, h.name() << " -> " << g.name());
    }
}

TEST_CASE("bounded matrix enumeration") {
  const auto homs = enumerate_homomorphisms(Group::free_abelian(1), Group::free_abelian(2), 1);
  CHECK(homs.size() == 9);
}

TEST_CASE("fully invariant subgroups") {
  const Group z4 = build_cyclic(4);
  CHECK(is_fully_invariant(Subgroup::from_elements(z4, {el(0), el(2)})));
  const Group s3 = build_symmetric(3);
  const Subgroup a3 = commutator_subgroup(s3);
  CHECK(a3.order() == 3);
  CHECK(is_fully_invariant(a3));
  const int swap01 = static_cast<int>(permutation_index({1, 0, 2}));
  CHECK_FALSE(is_fully_invariant(Subgroup::generated_by(s3, {el(swap01)})));
}

TEST_CASE("fully invariant matches the definition over End(G)") {
  for (const auto& g : small_groups(8)) {
    const auto ends = oracle::all_function_homs(g, g);
    for (const auto& k : all_subgroups(g)) {
      bool expected = true;
      for (const auto& f : ends)
        for (int m : k.indices()) expected = expected && k.contains(f[static_cast<std::size_t>(m)]);
      CHECK_MESSAGE(is_fully_invariant(k) == expected, g.name() << " " << k.describe());
    }
  }
}

TEST_CASE("subgroup lattice sizes") {
  CHECK(all_subgroups(build_cyclic(6)).size() == 4);
  CHECK(all_subgroups(build_symmetric(3)).size() == 6);
  CHECK(all_subgroups(build_quaternion()).size() == 6);
  CHECK(all_subgroups(build_dihedral(4)).size() == 10);
  CHECK(normal_subgroups(build_symmetric(3)).size() == 3);
}

TEST_CASE("quotients") {
  const Group z4 = build_cyclic(4);
  auto q = quotient_group(z4, Subgroup::from_elements(z4, {el(0), el(2)}));
  CHECK(q.group.order() == 2);
  CHECK(q.projection(1) == q.projection(3));
  CHECK(q.projection.is_surjective());
  const Group z6 = build_cyclic(6);
  CHECK(quotient_group(z6, Subgroup::from_elements(z6, {el(0), el(3)})).group.order() == 3);
  const Group s3 = build_symmetric(3);
  CHECK(quotient_group(s3, commutator_subgroup(s3)).group.order() == 2);
  const int swap01 = static_cast<int>(permutation_index({1, 0, 2}));
  CHECK_THROWS_AS(quotient_group(s3, Subgroup::generated_by(s3, {el(swap01)})), Error);
}

TEST_CASE("kernel of the projection is N") {
  for (const auto& g : small_groups(8))
    for (const auto& n : normal_subgroups(g)) {
      const auto q = quotient_group(g, n);
      for (int a = 0; a < static_cast<int>(g.order()); ++a)
        CHECK((q.projection(a) == q.group.identity_index()) == n.contains(a));
    }
}

TEST_CASE("induced endomorphisms") {
  const Group z4 = build_cyclic(4);
  const Subgroup n = Subgroup::from_elements(z4, {el(0), el(2)});
  CHECK(induced_endomorphism(gen_hom(z4, z4, {2}), n).is_trivial());
  CHECK(induced_endomorphism(Homomorphism::identity(z4), n).is_identity());
  const Group z6 = build_cyclic(6);
  const auto hat = induced_endomorphism(gen_hom(z6, z6, {5}), Subgroup::from_elements(z6, {el(0), el(2), el(4)}));
  CHECK(hat.domain().order() == 2);
  CHECK(hat(1) == 1);
  const Group v4 = direct_product(build_cyclic(2), build_cyclic(2));
  const auto swap = gen_hom(v4, v4, {2, 1});
  CHECK_THROWS_AS(induced_endomorphism(swap, Subgroup::from_elements(v4, {el(0), el(2)})), Error);
}

TEST_CASE("induced endomorphisms commute with the projection") {
  for (const auto& g : small_groups(8))
    for (const auto& n : normal_subgroups(g)) {
      const auto q = quotient_group(g, n);
      for (const auto& phi : enumerate_endomorphisms(g)) {
        if (!is_invariant_under(n, phi)) {
          CHECK_THROWS_AS(induced_endomorphism(phi, n, q), Error);
          continue;
        }
        const auto hat = induced_endomorphism(phi, n, q);
        for (int a = 0; a < static_cast<int>(g.order()); ++a)
          CHECK(q.projection(phi(a)) == hat(q.projection(a)));
      }
    }
}

TEST_CASE("restricted homomorphisms") {
  const Group z4 = build_cyclic(4);
  const Subgroup k = Subgroup::from_elements(z4, {el(0), el(2)});
  const auto r = restrict_homomorphism(Homomorphism::identity(z4), k);
  CHECK(r.domain().order() == 2);
  CHECK(r.is_identity());
  const Group z = Group::free_abelian(1);
  const auto twice = Homomorphism::from_matrix(z, z, IntMatrix::from_rows({{2}}));
  const Subgroup even = Subgroup::generated_by(z, {Element::point({2})});
  const auto rz = restrict_homomorphism(twice, even);
  CHECK(rz(Element::point({1})) == Element::point({1}));  // 2 -> 4, i.e. 1 -> 2 in units of the image lattice
}
