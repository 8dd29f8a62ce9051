#include <doctest.h>

#include "permring/oracle.hpp"
#include "properties.hpp"

using namespace permring;
using namespace permring::testing;

TEST_CASE("algebraic invariants on random subgroups") {
  for (std::uint32_t seed : {1u, 20261019u}) {
    auto log = run_property_suite(seed, 6);
    INFO("seed " << seed);
    CHECK(log.checks > 500);
    for (const auto& f : log.failures) FAIL_CHECK(f);
  }
}

TEST_CASE("random stable degrees match the subset search") {
  std::mt19937 rng(7);
  for (const char* name : {"S4", "D6", "S3xC2", "A4", "C2xC2xC2"}) {
    auto g = cli::parse_group_spec(name).group;
    for (int i = 0; i < 8; ++i) {
      auto h = random_subgroup(g, rng);
      for (auto p : primes_dividing(g->order())) {
        auto up = static_cast<unsigned>(p);
        INFO(name << " H=<" << format_generators(h) << "> p=" << p);
        CHECK(degree(perm_ring(CategoryTag::stable(up), h)) == oracle::oracle_degree_stable(h, up));
      }
    }
  }
}

TEST_CASE("tower levels have falling-factorial sizes in mod") {
  std::mt19937 rng(11);
  for (const char* name : {"S4", "D5", "C6"}) {
    auto g = cli::parse_group_spec(name).group;
    for (int i = 0; i < 5; ++i) {
      auto h = random_subgroup(g, rng);
      if (h.index() > 8) continue;
      auto tower = splitting_tower(perm_ring(CategoryTag::mod(), h));
      for (const auto& level : tower.levels)
        CHECK(level.points == falling_factorial(h.index(), level.n));
    }
  }
}
