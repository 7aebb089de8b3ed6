#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amt/abelian_group.hpp"
#include "amt/integer.hpp"

using namespace amt;

TEST_CASE("normal form from cyclic orders") {
  CHECK(GroupStructure::from_cyclic_orders({2, 2, 2}).invariant_factors() == std::vector<std::uint64_t>{2, 2, 2});
  CHECK(GroupStructure::from_cyclic_orders({2, 2, 1, 3}).invariant_factors() == std::vector<std::uint64_t>{2, 6});
  CHECK(GroupStructure::from_cyclic_orders({2, 2, 4}).invariant_factors() == std::vector<std::uint64_t>{2, 2, 4});
  CHECK(GroupStructure::from_cyclic_orders({4, 6}).invariant_factors() == std::vector<std::uint64_t>{2, 12});
  CHECK(GroupStructure::from_cyclic_orders({1}).invariant_factors().empty());
  CHECK(GroupStructure::from_cyclic_orders({2, 6}).to_string() == "C2 x C6");
  CHECK(GroupStructure().to_string() == "C1");
}

TEST_CASE("invariant factor validation") {
  CHECK_THROWS_AS(GroupStructure({2, 3}), std::domain_error);
  CHECK_THROWS_AS(GroupStructure({1, 2}), std::domain_error);
  CHECK(GroupStructure({2, 6}).order() == 12);
  CHECK(GroupStructure({2, 6}).exponent() == 6);
}

TEST_CASE("order census") {
  // C2 x C2: identity plus three involutions
  CHECK(GroupStructure::from_order_census({{1, 1}, {2, 3}}) == GroupStructure({2, 2}));
  CHECK(GroupStructure::from_order_census({{1, 1}, {2, 1}, {4, 2}}) == GroupStructure({4}));
  CHECK_THROWS_AS(GroupStructure::from_order_census({{1, 1}, {2, 2}}), std::domain_error);
  CHECK_THROWS_AS(GroupStructure::from_order_census({{2, 1}}), std::domain_error);
}

TEST_CASE("unit groups") {
  CHECK(unit_group_invariant_factors(9) == GroupStructure({6}));
  CHECK(unit_group_invariant_factors(24) == GroupStructure({2, 2, 2}));
  CHECK(unit_group_invariant_factors(36) == GroupStructure({2, 6}));
  CHECK(unit_group_invariant_factors(48) == GroupStructure({2, 2, 4}));
  CHECK(unit_group_invariant_factors(8) == GroupStructure({2, 2}));
  CHECK_THROWS_AS(unit_group_invariant_factors(2), std::domain_error);
}

TEST_CASE("property: unit group order is phi(N) and matches the CRT product") {
  for (std::uint64_t N = 3; N <= 400; ++N) {
    const GroupStructure g = unit_group_invariant_factors(N);
    CHECK(g.order() == euler_phi(N));
    std::vector<std::uint64_t> cyclic;
    for (const auto& [p, e] : factor_u64(N)) {
      std::uint64_t pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      if (p == 2) {
        if (e == 2) cyclic.push_back(2);
        if (e >= 3) {
          cyclic.push_back(2);
          cyclic.push_back(pe / 4);
        }
      } else {
        cyclic.push_back(pe / p * (p - 1));
      }
    }
    CHECK(g == GroupStructure::from_cyclic_orders(cyclic));
  }
}
