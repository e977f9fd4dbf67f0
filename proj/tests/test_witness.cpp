#include <doctest.h>

#include "gclt/constructors.hpp"
#include "gclt/group_ops.hpp"
#include "gclt/group_spec.hpp"
#include "gclt/numbers.hpp"
#include "gclt/predicates.hpp"
#include "gclt/witness.hpp"

using namespace gclt;

TEST_CASE("non-cclt witnesses from the case split") {
  const Witness w8 = non_cclt_witness(8);
  CHECK(w8.failing_divisor == 4);
  CHECK(w8.verified);
  CHECK(is_isomorphic(w8.group, build_spec("C2xC2xC2")));

  const Witness w30 = non_cclt_witness(30);
  CHECK(w30.failing_divisor == 6);
  CHECK(is_isomorphic(w30.group, build_spec("D3xC5")));

  const Witness w36 = non_cclt_witness(36);
  CHECK(w36.failing_divisor == 9);
  CHECK(is_isomorphic(w36.group, build_spec("A3x3xC4")));

  const Witness w28 = non_cclt_witness(28);
  CHECK(w28.failing_divisor == 4);
}

TEST_CASE("non-aclt witnesses from the case split") {
  const Witness w20 = non_aclt_witness(20);
  CHECK(w20.failing_divisor == 10);
  CHECK(w20.group.same_table(metacyclic(5, 4, 2)));

  const Witness w32 = non_aclt_witness(32);
  CHECK(w32.failing_divisor == 16);
  CHECK(w32.group.same_table(
      elementary_semidirect(2, 3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, 4)));

  const Witness w12 = non_aclt_witness(12);
  CHECK(w12.failing_divisor == 6);
  CHECK(is_isomorphic(w12.group, build_spec("P(4;(1 2 3),(1 2)(3 4))")));

  const Witness w18 = non_aclt_witness(18);
  CHECK(w18.failing_divisor == 6);
  CHECK(is_isomorphic(w18.group, dihedral(9)));

  const Witness w36 = non_aclt_witness(36);
  CHECK(w36.failing_divisor == 18);
  CHECK(w36.group.order() == 36);
}

TEST_CASE("witnesses verify and fail the overall predicate") {
  for (long long n = 2; n <= 40; ++n) {
    if (!is_cclt_number(n)) {
      const Witness w = non_cclt_witness(n);
      CHECK(w.verified);
      CHECK(!find_cyclic_subgroup_of_order(w.group, static_cast<int>(w.failing_divisor))
                 .has_value());
      CHECK(!is_cclt_group(w.group).ok);
      CHECK(w.failing_divisor < n);
      CHECK(n % w.failing_divisor == 0);
    }
    if (!is_aclt_number(n)) {
      const Witness w = non_aclt_witness(n);
      CHECK(w.verified);
      CHECK(!find_abelian_subgroup_of_order(w.group, static_cast<int>(w.failing_divisor))
                 .has_value());
      CHECK(!is_aclt_group(w.group).ok);
    }
  }
}

TEST_CASE("witness construction is deterministic") {
  for (const long long n : {8, 24, 30, 50}) {
    if (!is_cclt_number(n))
      CHECK(non_cclt_witness(n).group.same_table(non_cclt_witness(n).group));
    if (!is_aclt_number(n))
      CHECK(non_aclt_witness(n).group.same_table(non_aclt_witness(n).group));
  }
}

TEST_CASE("witness rejects numbers that satisfy the property") {
  CHECK_THROWS_AS(non_cclt_witness(6), std::invalid_argument);
  CHECK_THROWS_AS(non_cclt_witness(4), std::invalid_argument);
  CHECK_THROWS_AS(non_aclt_witness(28), std::invalid_argument);
  CHECK_THROWS_AS(non_aclt_witness(16), std::invalid_argument);
}

TEST_CASE("witness json") {
  const auto j = non_cclt_witness(8).to_json();
  CHECK(j.at("n") == 8);
  CHECK(j.at("kind") == "cclt");
  CHECK(j.at("failing_divisor") == 4);
  CHECK(j.at("verified") == true);
  CHECK(j.at("group").at("order") == 8);
  CHECK(j.at("group").at("table").size() == 8);
  CHECK(j.contains("clause"));
}

TEST_CASE("witnesses above the bound skip verification") {
  const Witness w = non_aclt_witness(2 * 243, 400);  // 486 = 2 * 3^5
  CHECK(w.group.order() == 486);
  CHECK(!w.verified);
  CHECK(w.failing_divisor == 243);
}
