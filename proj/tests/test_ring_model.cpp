#include <doctest.h>

#include <algorithm>

#include "permring/error.hpp"
#include "permring/oracle.hpp"
#include "permring/ring_model.hpp"
#include "test_support.hpp"

using namespace permring;
using namespace permring::testing;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalInconsistency;
}

// Quasi-Galois criterion in the stable category, by direct enumeration over
// g in G - H and h in H - H^g.
bool stable_quasi_galois_by_search(const Subgroup& h, unsigned p) {
  const auto& g = *h.parent();
  if (h.order() % p != 0) return false;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    auto hx = conjugate_subgroup(h, x);
    for (ElementId y : h.elements()) {
      if (hx.contains(y)) continue;
      auto hxy = conjugate_subgroup(h, g.multiply(x, y));
      std::size_t common = 0;
      for (ElementId z : h.elements())
        if (hx.contains(z) && hxy.contains(z)) ++common;
      if (common % p == 0) return false;
    }
  }
  return true;
}

std::vector<Subgroup> battery_subgroups(const GroupPtr& g) {
  return oracle::enumerate_subgroups(whole_group(g));
}

}  // namespace

TEST_CASE("perm_ring construction") {
  auto s4 = symmetric(4);
  auto unit = perm_ring(CategoryTag::mod(), whole_group(s4));
  CHECK(is_unit(unit));
  CHECK(unit.carrier().size() == 1);

  auto r = perm_ring(CategoryTag::stable(2), stab(s4, {3}));
  CHECK(r.category().is_stable());
  CHECK(r.carrier().size() == 4);

  auto s3 = symmetric(3);
  auto c2 = gen(s3, {cyc(3, {{0, 1}})});
  auto d = perm_ring(CategoryTag::derived(2), c2);
  CHECK(d.carrier().stabilizer(0) == c2);

  CHECK(code_of([&] { perm_ring(CategoryTag{Ambient::Stable, std::nullopt}, c2); }) ==
        ErrorCode::MissingPrime);
  CHECK(code_of([&] { perm_ring(CategoryTag::stable(5), c2); }) ==
        ErrorCode::PrimeDoesNotDivideOrder);
  CHECK(code_of([&] { perm_ring(CategoryTag::derived(4), c2); }) == ErrorCode::NotPrime);
}

TEST_CASE("ambient names") {
  CHECK(to_string(Ambient::Stable) == "stable");
  CHECK(parse_ambient("derived") == Ambient::Derived);
  CHECK_FALSE(parse_ambient("homotopy"));
}

TEST_CASE("is_zero") {
  auto s3 = symmetric(3);
  auto c2 = gen(s3, {cyc(3, {{0, 1}})});
  CHECK(is_zero(perm_ring(CategoryTag::stable(3), c2)));
  CHECK(is_zero(perm_ring(CategoryTag::mod(), GSet::trivial(s3, 0))));
  CHECK(is_zero(perm_ring(CategoryTag::stable(2), GSet::trivial(s3, 0))));
  auto s4 = symmetric(4);
  CHECK_FALSE(is_zero(perm_ring(CategoryTag::stable(2), stab(s4, {3}))));
  CHECK_FALSE(is_zero(perm_ring(CategoryTag::derived(3), c2)));
}

TEST_CASE("is_unit") {
  for (auto g : {symmetric(3), symmetric(4), klein_product()}) {
    CHECK(is_unit(perm_ring(CategoryTag::mod(), whole_group(g))));
    CHECK(is_unit(perm_ring(CategoryTag::derived(2), whole_group(g))));
    CHECK(is_unit(perm_ring(CategoryTag::stable(2), whole_group(g))));
  }
  auto s3 = symmetric(3);
  auto c2 = gen(s3, {cyc(3, {{0, 1}})});
  CHECK(is_unit(perm_ring(CategoryTag::stable(2), c2)));
  CHECK_FALSE(is_unit(perm_ring(CategoryTag::mod(), c2)));
  CHECK_FALSE(is_unit(perm_ring(CategoryTag::stable(3), c2)));
  auto s4 = symmetric(4);
  CHECK_FALSE(is_unit(perm_ring(CategoryTag::stable(2), stab(s4, {3}))));
  CHECK(code_of([&] { is_unit(perm_ring(CategoryTag::mod(), GSet::trivial(s4, 2))); }) ==
        ErrorCode::NotTransitive);
}

TEST_CASE("indecomposable_factors") {
  auto s4 = symmetric(4);
  auto h = stab(s4, {3});
  auto r = perm_ring(CategoryTag::mod(), h);
  CHECK(indecomposable_factors(r).size() == 1);

  auto x = coset_gset(h);
  auto twice = indecomposable_factors(perm_ring(CategoryTag::mod(), disjoint_union(x, x)));
  REQUIRE(twice.size() == 2);
  CHECK(gsets_isomorphic(twice[0].carrier(), twice[1].carrier()));

  auto f = indecomposable_factors(perm_ring(CategoryTag::stable(2), product(x, x)));
  std::vector<std::size_t> orders;
  for (const auto& ring : f) orders.push_back(ring.carrier().stabilizer(0).order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{2, 6});

  auto s3 = symmetric(3);
  auto y = coset_gset(gen(s3, {cyc(3, {{0, 1}})}));
  auto kept = indecomposable_factors(perm_ring(CategoryTag::stable(2), product(y, y)));
  CHECK(kept.size() == 1);
}

TEST_CASE("degree") {
  auto s4 = symmetric(4);
  auto h = stab(s4, {3});
  CHECK(degree(perm_ring(CategoryTag::stable(2), h)) == 2);
  CHECK(degree(perm_ring(CategoryTag::derived(2), h)) == 4);
  CHECK(degree(perm_ring(CategoryTag::mod(), h)) == 4);
  for (std::size_t n = 0; n <= 5; ++n)
    CHECK(degree(perm_ring(CategoryTag::mod(), GSet::trivial(s4, n))) == n);

  auto v = klein_product();
  CHECK(degree(perm_ring(CategoryTag::stable(2), gen(v, {cyc(4, {{0, 1}})}))) == 2);

  for (auto g : {symmetric(3), symmetric(4), dihedral8(), alternating4()})
    for (const auto& k : battery_subgroups(g))
      for (unsigned p : {2u, 3u})
        if (g->order() % p == 0)
          CHECK(degree(perm_ring(CategoryTag::stable(p), k)) ==
                oracle::oracle_degree_stable(k, p));
}

TEST_CASE("splitting_tower") {
  auto s4 = symmetric(4);
  auto h = stab(s4, {3});
  auto tower = splitting_tower(perm_ring(CategoryTag::mod(), h));
  CHECK(tower.degree == 4);
  REQUIRE(tower.levels.size() == 6);
  std::vector<std::uint64_t> points;
  for (const auto& l : tower.levels) points.push_back(l.points);
  CHECK(points == std::vector<std::uint64_t>{1, 4, 12, 24, 24, 0});
  CHECK(tower.levels[2].orbits.front().stabilizer.order() == 2);
  CHECK(tower.levels[3].orbits.front().stabilizer.is_trivial());

  auto stable = splitting_tower(perm_ring(CategoryTag::stable(2), h));
  CHECK(stable.degree == 2);
  REQUIRE(stable.levels.size() == 4);
  CHECK(stable.levels[2].points == 12);
  CHECK(stable.levels[3].orbits.empty());

  // each orbit stabilizer is an intersection H cap H^g1 cap ... of conjugates
  for (const auto& l : tower.levels)
    for (const auto& o : l.orbits) {
      auto x = coset_gset(h);
      CHECK(x.stabilizer(o.tuple) == o.stabilizer);
      CHECK(o.size * o.stabilizer.order() == s4->order());
    }

  Budgets tight;
  tight.points = 10;
  CHECK(code_of([&] { splitting_tower(perm_ring(CategoryTag::mod(), h), tight); }) ==
        ErrorCode::SizeBudgetExceeded);
}

TEST_CASE("count_ring_endomorphisms") {
  auto s4 = symmetric(4);
  CHECK(count_ring_endomorphisms(perm_ring(CategoryTag::mod(), stab(s4, {3}))) == 1);
  auto a4 = gen(s4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1, 3}})});
  CHECK(count_ring_endomorphisms(perm_ring(CategoryTag::derived(2), a4)) == 2);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < n; ++i) expected *= n;
    CHECK(count_ring_endomorphisms(perm_ring(CategoryTag::mod(), GSet::trivial(s4, n))) ==
          expected);
  }
  CHECK(code_of([&] {
          count_ring_endomorphisms(perm_ring(CategoryTag::stable(2), stab(s4, {3})));
        }) == ErrorCode::UnsupportedCategory);
}

TEST_CASE("is_quasi_galois") {
  auto s4 = symmetric(4);
  auto a4 = gen(s4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1, 3}})});
  auto report = is_quasi_galois(perm_ring(CategoryTag::derived(2), a4));
  CHECK(report.is_quasi_galois);
  CHECK(report.degree == 2);
  CHECK(report.endo_count == 2u);

  auto derived = is_quasi_galois(perm_ring(CategoryTag::derived(2), stab(s4, {3})));
  CHECK_FALSE(derived.is_quasi_galois);
  CHECK(derived.endo_count == 1u);

  auto v = klein_product();
  CHECK(is_quasi_galois(perm_ring(CategoryTag::stable(2), gen(v, {cyc(4, {{0, 1}})})))
            .is_quasi_galois);

  auto s3 = symmetric(3);
  auto c2 = gen(s3, {cyc(3, {{0, 1}})});
  CHECK(code_of([&] { is_quasi_galois(perm_ring(CategoryTag::stable(3), c2)); }) ==
        ErrorCode::ZeroRing);

  for (auto g : {symmetric(3), symmetric(4), dihedral8(), alternating4(), klein_product()})
    for (const auto& k : battery_subgroups(g)) {
      CHECK(is_quasi_galois(perm_ring(CategoryTag::derived(2), k)).is_quasi_galois ==
            is_normal(k));
      for (unsigned p : {2u, 3u}) {
        if (k.order() % p != 0) continue;
        auto r = is_quasi_galois(perm_ring(CategoryTag::stable(p), k));
        CHECK(r.is_quasi_galois == stable_quasi_galois_by_search(k, p));
        CHECK(r.witness.has_value() == !r.is_quasi_galois);
        if (r.witness) {
          CHECK_FALSE(k.contains(r.witness->g));
          CHECK(k.contains(r.witness->h));
        }
      }
    }
}

TEST_CASE("support") {
  auto s4 = symmetric(4);
  auto all = elementary_abelian_classes(s4, 2);
  auto unit = support(perm_ring(CategoryTag::stable(2), whole_group(s4)));
  CHECK(unit.class_indices.size() == all.classes.size());
  auto unit_mod = support(perm_ring(CategoryTag::mod(2), whole_group(s4)));
  CHECK(unit_mod.class_indices.size() == all.classes.size() + 1);

  auto sylow = support(perm_ring(CategoryTag::stable(2), sylow_subgroup(s4, 2)));
  CHECK(sylow == unit);

  auto h = support(perm_ring(CategoryTag::stable(2), stab(s4, {3})));
  REQUIRE(h.classes.size() == 1);
  CHECK(h.classes.front().order() == 2);
  CHECK(are_conjugate(h.classes.front(), gen(s4, {cyc(4, {{0, 1}})})));

  CHECK(code_of([&] { support(perm_ring(CategoryTag::mod(), stab(s4, {3}))); }) ==
        ErrorCode::MissingPrime);

  auto r = perm_ring(CategoryTag::derived(2), stab(s4, {3}));
  CHECK(tower_level_support(r, 0) == support(perm_ring(CategoryTag::derived(2), whole_group(s4))));
  CHECK(tower_level_support(r, 1) == support(r));
  CHECK(tower_level_support(r, 4).class_indices == std::vector<std::size_t>{0});
}

TEST_CASE("has_constant_degree") {
  auto s4 = symmetric(4);
  CHECK(has_constant_degree(perm_ring(CategoryTag::stable(2), stab(s4, {3}))));
  CHECK_FALSE(has_constant_degree(perm_ring(CategoryTag::derived(2), stab(s4, {3}))));
  for (auto g : {symmetric(3), symmetric(4), dihedral8(), alternating4()})
    for (const auto& k : battery_subgroups(g))
      if (is_normal(k)) {
        CHECK(has_constant_degree(perm_ring(CategoryTag::derived(2), k)));
        if (k.order() % 2 == 0)
          CHECK(has_constant_degree(perm_ring(CategoryTag::stable(2), k)));
      }
}

TEST_CASE("quasi_galois_closure") {
  auto s4 = symmetric(4);
  auto h = stab(s4, {3});
  auto c = quasi_galois_closure(perm_ring(CategoryTag::stable(2), h));
  CHECK(c.constant_degree);
  REQUIRE(c.closure_stabilizer);
  CHECK(c.closure_stabilizer->order() == 2);
  CHECK(is_subset(*c.closure_stabilizer, h));
  const auto& t = s4->element(c.closure_stabilizer->elements()[1]);
  CHECK(t.cycles().size() == 1);
  CHECK(t.cycles().front().size() == 2);
  CHECK(c.tuple_points.size() == 2);
  for (std::size_t i = 0; i < c.tuple_points.size(); ++i)
    CHECK(coset_gset(h).stabilizer(c.tuple_points[i]) ==
          conjugate_subgroup(h, c.tuple_witness[i]));

  auto a4 = gen(s4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1, 3}})});
  auto ca = quasi_galois_closure(perm_ring(CategoryTag::derived(2), a4));
  REQUIRE(ca.closure_stabilizer);
  CHECK(*ca.closure_stabilizer == a4);

  auto none = quasi_galois_closure(perm_ring(CategoryTag::derived(2), h));
  CHECK_FALSE(none.constant_degree);
  CHECK_FALSE(none.closure);

  auto v = klein_product();
  auto factor = gen(v, {cyc(4, {{0, 1}})});
  auto cv = quasi_galois_closure(perm_ring(CategoryTag::stable(2), factor));
  REQUIRE(cv.closure_stabilizer);
  CHECK(*cv.closure_stabilizer == factor);
}

TEST_CASE("splitting_rings and splits") {
  auto s4 = symmetric(4);
  auto h = stab(s4, {3});
  auto mod = splitting_rings(perm_ring(CategoryTag::mod(), h));
  REQUIRE(mod.size() == 1);
  CHECK(mod.front().carrier().stabilizer(0).is_trivial());

  auto a4 = gen(s4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1, 3}})});
  auto own = splitting_rings(perm_ring(CategoryTag::derived(2), a4));
  REQUIRE(own.size() == 1);
  CHECK(own.front().carrier().stabilizer(0) == a4);

  auto stable = splitting_rings(perm_ring(CategoryTag::stable(2), h));
  REQUIRE(stable.size() == 1);
  CHECK(stable.front().carrier().stabilizer(0).order() == 2);

  auto r = perm_ring(CategoryTag::mod(), h);
  CHECK(splits(trivial_subgroup(s4), r));
  CHECK_FALSE(splits(h, r));
  CHECK(splits(stab(s4, {0, 1, 2}), r));
}

TEST_CASE("strongly p-embedded subgroups") {
  auto s3 = symmetric(3);
  auto c2 = gen(s3, {cyc(3, {{0, 1}})});
  CHECK(is_strongly_p_embedded(c2, whole_group(s3), 2));
  CHECK_FALSE(is_strongly_p_embedded(c2, whole_group(s3), 3));
  auto s4 = symmetric(4);
  CHECK_FALSE(is_strongly_p_embedded(stab(s4, {3}), whole_group(s4), 2));
  CHECK_FALSE(stable_galois_violation(c2, whole_group(s3), 2));
}
