#include <doctest.h>

#include <random>

#include "gclt/constructors.hpp"
#include "gclt/group_ops.hpp"
#include "gclt/group_spec.hpp"
#include "gclt/numbers.hpp"
#include "gclt/predicates.hpp"
#include "support/oracles.hpp"

using namespace gclt;

namespace {

Subgroup subgroup_of_order(const FiniteGroup& g, int d) {
  for (const Subgroup& h : all_subgroups(g))
    if (h.order() == d) return h;
  throw std::logic_error("no subgroup of that order");
}

}  // namespace

TEST_CASE("table validation rejects broken tables") {
  // Identity must be element 0.
  CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), std::invalid_argument);
  // Latin square but not associative: x*y = x + y + x*y terms chosen badly.
  CHECK_THROWS_AS(FiniteGroup(5, {0, 1, 2, 3, 4,  //
                                  1, 0, 3, 4, 2,  //
                                  2, 4, 0, 1, 3,  //
                                  3, 2, 4, 0, 1,  //
                                  4, 3, 1, 2, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroup(0, {}), std::invalid_argument);
}

TEST_CASE("element orders") {
  const FiniteGroup c6 = cyclic(6);
  CHECK(c6.element_order(0) == 1);
  CHECK(c6.element_order(1) == 6);
  const FiniteGroup d4 = dihedral(4);
  for (Elem x = 4; x < 8; ++x) CHECK(d4.element_order(x) == 2);
  CHECK_THROWS_AS(c6.element_order(6), std::out_of_range);
  for (Elem x = 0; x < 8; ++x) CHECK(8 % d4.element_order(x) == 0);
}

TEST_CASE("generated subgroups") {
  const FiniteGroup c12 = cyclic(12);
  CHECK(generated_subgroup(c12, {}).elements() == std::vector<Elem>{0});
  const Elem four[] = {4};
  CHECK(generated_subgroup(c12, four).elements() == std::vector<Elem>{0, 4, 8});
  const Elem pair[] = {2, 3};
  CHECK(generated_subgroup(c12, pair).order() == 12);
  const Elem bad[] = {12};
  CHECK_THROWS_AS(generated_subgroup(c12, bad), std::out_of_range);
}

TEST_CASE("subgroup lattice counts") {
  CHECK(all_subgroups(cyclic(6)).size() == 4);
  CHECK(all_subgroups(dihedral(3)).size() == 6);
  CHECK(all_subgroups(dicyclic(2)).size() == 6);
  CHECK_THROWS_AS(all_subgroups(cyclic(500)), std::invalid_argument);
}

TEST_CASE("lattice agrees with exhaustive subset scan") {
  for (const char* spec : {"C6", "D3", "Q8", "C12", "D4", "C2xC4", "A2x2x2",
                           "Dic3", "P(4;(1 2 3),(1 2)(3 4))", "C2xC6", "D7"}) {
    const FiniteGroup g = build_spec(spec);
    CAPTURE(spec);
    CHECK(static_cast<int>(all_subgroups(g).size()) ==
          test::exhaustive_subgroup_count(g));
  }
}

TEST_CASE("subgroup count is stable under relabelling") {
  std::mt19937 rng(7);
  for (const char* spec : {"D6", "Dic3", "C2xC4", "M(7,3,2)"}) {
    const FiniteGroup g = build_spec(spec);
    const std::size_t count = all_subgroups(g).size();
    for (int trial = 0; trial < 3; ++trial)
      CHECK(all_subgroups(test::relabel(g, rng)).size() == count);
  }
}

TEST_CASE("lagrange over the lattice") {
  for (const char* spec : {"D6", "Q16", "M(5,4,2)", "A3x9"}) {
    const FiniteGroup g = build_spec(spec);
    for (const Subgroup& h : all_subgroups(g)) {
      CHECK(g.order() % h.order() == 0);
      CHECK(h.contains(0));
    }
  }
}

TEST_CASE("cyclic subgroups") {
  CHECK(all_cyclic_subgroups(cyclic(1)).size() == 1);
  CHECK(all_cyclic_subgroups(dihedral(3)).size() == 5);
  CHECK(all_cyclic_subgroups(build_spec("C2xC4")).size() == 6);
}

TEST_CASE("quotients") {
  const FiniteGroup c12 = cyclic(12);
  CHECK(quotient(c12, full_subgroup(c12)).order() == 1);
  CHECK(is_isomorphic(quotient(c12, subgroup_of_order(c12, 3)), cyclic(4)));

  const FiniteGroup d4 = dihedral(4);
  const FiniteGroup q = quotient(d4, center(d4));
  CHECK(is_isomorphic(q, build_spec("C2xC2")));

  const FiniteGroup s3 = dihedral(3);
  CHECK_THROWS_AS(quotient(s3, subgroup_of_order(s3, 2)), std::invalid_argument);

  for (const char* spec : {"C12", "A2x4", "A3x3"}) {
    const FiniteGroup g = build_spec(spec);
    for (const Subgroup& n : all_subgroups(g)) {
      const FiniteGroup gn = quotient(g, n);
      CHECK(gn.order() * n.order() == g.order());
      CHECK(is_abelian(gn));
    }
  }
}

TEST_CASE("center and commutator subgroup") {
  const FiniteGroup c6 = cyclic(6);
  CHECK(center(c6).order() == 6);
  CHECK(commutator_subgroup(c6).order() == 1);

  const FiniteGroup s3 = dihedral(3);
  CHECK(center(s3).order() == 1);
  CHECK(commutator_subgroup(s3).order() == 3);

  const FiniteGroup d4 = dihedral(4);
  CHECK(center(d4).order() == 2);
  CHECK(commutator_subgroup(d4).same_elements(center(d4)));
}

TEST_CASE("centralizer and normalizer") {
  const FiniteGroup s3 = dihedral(3);
  CHECK(centralizer(s3, trivial_subgroup(s3)).order() == 6);

  const Subgroup refl = subgroup_of_order(s3, 2);
  CHECK(centralizer(s3, refl).same_elements(refl));

  const Subgroup rot = subgroup_of_order(s3, 3);
  CHECK(normalizer(s3, rot).order() == 6);

  for (const Subgroup& h : all_subgroups(s3)) {
    const Subgroup c = centralizer(s3, h);
    const Subgroup n = normalizer(s3, h);
    for (const Elem x : c.elements()) CHECK(n.contains(x));
  }

  const FiniteGroup c6 = cyclic(6);
  CHECK_THROWS_AS(centralizer(c6, trivial_subgroup(s3)), std::invalid_argument);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(dihedral(3), 2).order() == 2);
  CHECK(sylow_subgroup(cyclic(12), 3).order() == 3);
  CHECK(sylow_subgroup(dihedral(6), 2).order() == 4);
  CHECK(sylow_subgroup(cyclic(10), 3).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(cyclic(12), 4), std::invalid_argument);

  for (const char* spec : {"D6", "Dic5", "M(7,3,2)", "C2xC14"}) {
    const FiniteGroup g = build_spec(spec);
    for (const long long p : prime_set(g.order())) {
      int part = 1;
      int rest = g.order();
      while (rest % p == 0) {
        rest /= static_cast<int>(p);
        part *= static_cast<int>(p);
      }
      CHECK(sylow_subgroup(g, p).order() == part);
    }
  }
}

TEST_CASE("normality") {
  const FiniteGroup s3 = dihedral(3);
  CHECK(is_normal(s3, subgroup_of_order(s3, 3)));  // index 2
  CHECK(!is_normal(s3, subgroup_of_order(s3, 2)));
  const FiniteGroup d4 = dihedral(4);
  CHECK(is_normal(d4, center(d4)));
}

TEST_CASE("isomorphism testing") {
  CHECK(!is_isomorphic(cyclic(4), build_spec("C2xC2")));
  CHECK(is_isomorphic(cyclic(6), build_spec("C2xC3")));
  CHECK(is_isomorphic(dihedral(3), metacyclic(3, 2, 2)));
  CHECK(!is_isomorphic(dihedral(4), dicyclic(2)));

  // C_m x C_n is cyclic of order mn exactly when gcd(m, n) = 1.
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      if (m * n > 48) continue;
      const bool iso = is_isomorphic(direct_product(cyclic(m), cyclic(n)),
                                     cyclic(m * n));
      CHECK(iso == (gcd_ll(m, n) == 1));
    }
}

TEST_CASE("isomorphism is reflexive and symmetric on a catalog slice") {
  const std::vector<FiniteGroup> groups = {
      build_spec("C12"), build_spec("C2xC6"), build_spec("D6"),
      build_spec("Dic3"), build_spec("P(4;(1 2 3),(1 2)(3 4))")};
  for (std::size_t i = 0; i < groups.size(); ++i) {
    CHECK(is_isomorphic(groups[i], groups[i]));
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      CHECK(is_isomorphic(groups[i], groups[j]) ==
            is_isomorphic(groups[j], groups[i]));
      CHECK(!is_isomorphic(groups[i], groups[j]));
    }
  }
}

TEST_CASE("subgroup construction validates closure") {
  const FiniteGroup c6 = cyclic(6);
  CHECK_THROWS_AS(Subgroup(c6, {0, 2}), std::invalid_argument);   // 2+2=4 missing
  CHECK_THROWS_AS(Subgroup(c6, {1, 2}), std::invalid_argument);   // no identity
  CHECK(Subgroup(c6, {0, 2, 4}).order() == 3);
}

TEST_CASE("order-d searches agree with the exhaustive scan") {
  for (const char* spec :
       {"D4", "Q8", "C2xC4", "Dic3", "P(4;(1 2 3),(1 2)(3 4))", "D8", "SD16"}) {
    const FiniteGroup g = build_spec(spec);
    for (const long long d : divisors(g.order())) {
      CAPTURE(spec);
      CAPTURE(d);
      CHECK(find_abelian_subgroup_of_order(g, static_cast<int>(d)).has_value() ==
            test::exhaustive_has_abelian_subgroup(g, static_cast<int>(d)));
    }
  }
}

TEST_CASE("found subgroups have the requested property") {
  for (const char* spec : {"D6", "Dic5", "SD16", "M(5,4,2)"}) {
    const FiniteGroup g = build_spec(spec);
    for (const long long dl : divisors(g.order())) {
      const int d = static_cast<int>(dl);
      if (const auto h = find_abelian_subgroup_of_order(g, d)) {
        CHECK(h->order() == d);
        CHECK(is_abelian(h->as_group()));
      }
      if (const auto h = find_cyclic_subgroup_of_order(g, d)) {
        CHECK(h->order() == d);
        CHECK(is_cyclic(h->as_group()));
      }
      if (const auto h = find_subgroup_of_order(g, d)) CHECK(h->order() == d);
    }
  }
}

TEST_CASE("json round trip") {
  const FiniteGroup g = build_spec("Dic3");
  const FiniteGroup back = FiniteGroup::from_json(g.to_json());
  CHECK(back.same_table(g));
  CHECK(back.spec() == "Dic3");
  const auto j = g.to_json();
  CHECK(j.at("order") == 12);
  CHECK(j.at("table").size() == 12);
}
