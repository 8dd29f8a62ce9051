#include <doctest.h>

#include <algorithm>

#include "permring/error.hpp"
#include "permring/gset.hpp"
#include "permring/oracle.hpp"
#include "test_support.hpp"

using namespace permring;
using namespace permring::testing;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> orbit_profile(const GSet& x) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& o : orbits(x)) out.emplace_back(o.size, o.stabilizer.order());
  std::sort(out.begin(), out.end());
  return out;
}

GSet natural_action(const GroupPtr& g) {
  std::vector<std::vector<Point>> tables;
  for (const auto& s : g->generators()) tables.emplace_back(s.images().begin(), s.images().end());
  return GSet(g, g->degree(), tables);
}

}  // namespace

TEST_CASE("coset_gset") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  CHECK(x.size() == 4);
  CHECK(gsets_isomorphic(x, natural_action(s4)));
  CHECK(x.stabilizer(0) == stab(s4, {3}));
  for (ElementId g = 0; g < s4->order(); ++g)
    CHECK(x.act(g, 0) == x.images_of(0)[g]);

  auto point = coset_gset(whole_group(s4));
  CHECK(point.size() == 1);
  CHECK(orbits(point).front().stabilizer == whole_group(s4));

  auto s3 = symmetric(3);
  auto y = coset_gset(gen(s3, {cyc(3, {{0, 1}})}));
  CHECK(y.size() == 3);
  CHECK(orbits(y).size() == 1);
}

TEST_CASE("disjoint_union") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  auto empty = GSet::trivial(s4, 0);
  CHECK(gsets_isomorphic(disjoint_union(x, empty), x));
  auto two = disjoint_union(GSet::trivial(s4, 1), GSet::trivial(s4, 1));
  CHECK(gsets_isomorphic(two, GSet::trivial(s4, 2)));
  auto xx = disjoint_union(x, x);
  CHECK(xx.size() == 8);
  CHECK(orbit_profile(xx) == std::vector<std::pair<std::size_t, std::size_t>>{{4, 6}, {4, 6}});
  CHECK_THROWS_AS(disjoint_union(x, coset_gset(whole_group(symmetric(3)))), Error);
}

TEST_CASE("product") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  auto xx = product(x, x);
  CHECK(xx.size() == 16);
  CHECK(orbit_profile(xx) == std::vector<std::pair<std::size_t, std::size_t>>{{4, 6}, {12, 2}});
  CHECK(orbit_profile(xx) == oracle::oracle_product_orbits(x, x));
  CHECK(orbits(xx).size() == 2);

  auto point = GSet::trivial(s4, 1);
  CHECK(gsets_isomorphic(product(point, x), x));

  auto s3 = symmetric(3);
  auto y = coset_gset(gen(s3, {cyc(3, {{0, 1}})}));
  CHECK(orbit_profile(product(y, y)) ==
        std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}, {6, 1}});
}

TEST_CASE("orbits") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  CHECK(orbits(x).size() == 1);
  CHECK(orbits(x).front().size == 4);
  auto t = GSet::trivial(s4, 5);
  auto os = orbits(t);
  CHECK(os.size() == 5);
  for (const auto& o : os) {
    CHECK(o.size == 1);
    CHECK(o.stabilizer == whole_group(s4));
  }
  auto labels = orbit_labels(disjoint_union(x, t));
  CHECK(labels[0] == 0);
  CHECK(labels[4] == 1);
}

TEST_CASE("distinct_tuples") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  CHECK(distinct_tuples(x, 0).size() == 1);
  CHECK(gsets_isomorphic(distinct_tuples(x, 1), x));
  auto top = distinct_tuples(x, 4);
  CHECK(top.size() == 24);
  auto os = orbits(top);
  REQUIRE(os.size() == 1);
  CHECK(os.front().stabilizer.is_trivial());
  CHECK(distinct_tuples(x, 5).size() == 0);
  CHECK_THROWS_AS(distinct_tuples(x, 6), Error);
  CHECK_THROWS_AS(distinct_tuples(x, 4, 10), Error);

  for (std::size_t n = 1; n <= 5; ++n) {
    auto t = distinct_tuples(GSet::trivial(s4, n), n);
    std::size_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    CHECK(t.size() == fact);
    CHECK(orbits(t).size() == fact);
  }

  for (std::uint64_t r = 0; r < 24; ++r) {
    auto t = unrank_distinct_tuple(4, 3, r);
    CHECK(rank_distinct_tuple(4, t) == r);
  }
  CHECK(unrank_distinct_tuple(4, 2, 0) == std::vector<Point>{0, 1});
  CHECK(unrank_distinct_tuple(4, 2, 11) == std::vector<Point>{3, 2});
}

TEST_CASE("falling_factorial") {
  CHECK(falling_factorial(4, 0) == 1);
  CHECK(falling_factorial(4, 2) == 12);
  CHECK(falling_factorial(4, 5) == 0);
  CHECK_THROWS_AS(falling_factorial(100, 30), Error);
}

TEST_CASE("count_equivariant_maps") {
  auto s4 = symmetric(4);
  auto x = coset_gset(stab(s4, {3}));
  CHECK(count_equivariant_maps(x, x) == 1);
  CHECK(count_equivariant_maps(x, x) == oracle::oracle_gmap_count(x, x));
  auto point = GSet::trivial(s4, 1);
  CHECK(count_equivariant_maps(x, point) == 1);
  auto two = GSet::trivial(s4, 2);
  CHECK(count_equivariant_maps(two, two) == 4);
  CHECK(count_equivariant_maps(point, x) == 0);

  GMap id{&x, &x, {0, 1, 2, 3}};
  CHECK(is_equivariant(id));
  GMap swap{&x, &x, {1, 0, 2, 3}};
  CHECK_FALSE(is_equivariant(swap));
}

TEST_CASE("gsets_isomorphic") {
  auto s4 = symmetric(4);
  auto h = stab(s4, {3});
  auto x = coset_gset(h);
  CHECK(gsets_isomorphic(x, x));
  CHECK(gsets_isomorphic(x, coset_gset(conjugate_subgroup(h, cyc(4, {{0, 3}})))));

  auto s3 = symmetric(3);
  CHECK_FALSE(gsets_isomorphic(coset_gset(gen(s3, {cyc(3, {{0, 1}})})),
                               coset_gset(gen(s3, {cyc(3, {{0, 1, 2}})}))));
}

TEST_CASE("stabilizers, fixed points and restriction") {
  auto s4 = symmetric(4);
  auto x = natural_action(s4);
  std::vector<Point> pair{0, 1};
  CHECK(x.stabilizer(pair) == stab(s4, {0, 1}));
  CHECK(x.fixed_points(stab(s4, {2, 3})) == std::vector<Point>{2, 3});

  ActionTable table(x);
  for (ElementId g = 0; g < s4->order(); ++g)
    for (Point p = 0; p < 4; ++p) CHECK(table(g, p) == s4->element(g)[p]);

  auto h = stab(s4, {3});
  auto [k, to_parent] = subgroup_as_group(h);
  auto r = restrict_gset(x, k, to_parent);
  CHECK(orbit_profile(r) == std::vector<std::pair<std::size_t, std::size_t>>{{1, 6}, {3, 2}});

  CHECK_THROWS_AS(GSet(s4, 3, {{0, 1, 2}}), Error);
  CHECK_THROWS_AS(GSet(s4, 2, {{0, 0}, {0, 1}}), Error);
}
