#include <doctest.h>

#include "permring/error.hpp"
#include "permring/oracle.hpp"
#include "test_support.hpp"

using namespace permring;
using namespace permring::oracle;
using namespace permring::testing;

TEST_CASE("oracle_degree_stable") {
  auto s4 = symmetric(4);
  CHECK(oracle_degree_stable(stab(s4, {3}), 2) == 2);
  CHECK(oracle_degree_stable(whole_group(s4), 2) == 1);
  CHECK(oracle_degree_stable(whole_group(s4), 3) == 1);
  auto s3 = symmetric(3);
  CHECK(oracle_degree_stable(gen(s3, {cyc(3, {{0, 1}})}), 3) == 0);
  CHECK(oracle_degree_stable(gen(s3, {cyc(3, {{0, 1}})}), 2) == 1);
  auto v = klein_product();
  CHECK(oracle_degree_stable(gen(v, {cyc(4, {{0, 1}})}), 2) == 2);
  CHECK_THROWS_AS(oracle_degree_stable(stab(s4, {3}), 5), Error);
}

TEST_CASE("oracle_product_orbits") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  CHECK(oracle_product_orbits(x, x) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{4, 6}, {12, 2}});
  auto point = GSet::trivial(s4, 1);
  CHECK(oracle_product_orbits(point, x) == std::vector<std::pair<std::size_t, std::size_t>>{{4, 6}});
  auto s3 = symmetric(3);
  auto y = coset_gset(gen(s3, {cyc(3, {{0, 1}})}));
  CHECK(oracle_product_orbits(y, y) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {6, 1}});
  CHECK_THROWS_AS(oracle_product_orbits(x, y), Error);
}

TEST_CASE("oracle_gmap_count") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  CHECK(oracle_gmap_count(x, x) == 1);
  CHECK(oracle_gmap_count(x, GSet::trivial(s4, 1)) == 1);
  auto two = GSet::trivial(s4, 2);
  CHECK(oracle_gmap_count(two, two) == 4);
  auto regular = coset_gset(trivial_subgroup(s4));
  try {
    oracle_gmap_count(regular, regular);
    FAIL("expected BudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("oracle_normal_core") {
  auto s4 = symmetric(4);
  CHECK(oracle_normal_core(stab(s4, {3})).is_trivial());
  auto a4 = gen(s4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1, 3}})});
  CHECK(oracle_normal_core(a4) == a4);
  auto core = oracle_normal_core(sylow_subgroup(s4, 2));
  CHECK(core.order() == 4);
  for (ElementId e : core.elements()) {
    const auto& p = s4->element(e);
    CHECK((p.is_identity() || (p.cycles().size() == 2 && p.cycles()[0].size() == 2)));
  }
}

TEST_CASE("enumerate_subgroups") {
  CHECK(enumerate_subgroups(whole_group(symmetric(3))).size() == 6);
  CHECK(enumerate_subgroups(whole_group(symmetric(4))).size() == 30);
  CHECK(enumerate_subgroups(whole_group(dihedral8())).size() == 10);
  CHECK(enumerate_subgroups(whole_group(alternating4())).size() == 10);
  CHECK(enumerate_subgroups(whole_group(klein_product())).size() == 5);
  CHECK(normal_subgroups_within(whole_group(symmetric(4))).size() == 4);
  auto s6 = symmetric(6);
  CHECK_THROWS_AS(enumerate_subgroups(whole_group(s6)), Error);
}
