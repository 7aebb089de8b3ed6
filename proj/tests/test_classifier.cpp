#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amt/classifier.hpp"
#include "amt/galois.hpp"
#include "amt/monogenicity.hpp"

using namespace amt;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("lemma_n_filter") {
  CHECK(lemma_n_filter(12));
  CHECK_FALSE(lemma_n_filter(10));
  CHECK(lemma_n_filter(1));
  CHECK_FALSE(lemma_n_filter(7));
  CHECK_THROWS_AS(lemma_n_filter(0), std::domain_error);
}

TEST_CASE("base case predicates") {
  const auto d1 = base_case_predicate(1, BigInt(2), BigInt(3));
  CHECK(d1.abelian_monogenic);
  CHECK(*d1.group == GroupStructure({2}));
  const auto d2 = base_case_predicate(2, BigInt(4), BigInt(2));
  CHECK(d2.abelian_monogenic);
  CHECK(*d2.group == GroupStructure({4}));
  CHECK_FALSE(base_case_predicate(6, BigInt(1), BigInt(1)).abelian_monogenic);
  CHECK(*base_case_predicate(6, BigInt(-1), BigInt(1)).group == GroupStructure({2, 6}));
  CHECK(*base_case_predicate(3, BigInt(1), BigInt(1)).group == GroupStructure({6}));
  CHECK(*base_case_predicate(2, BigInt(-1), BigInt(1)).group == GroupStructure({2, 2}));
  CHECK_FALSE(base_case_predicate(1, BigInt(3), BigInt(2)).abelian_monogenic);  // (x+1)(x+2)
  CHECK_THROWS_AS(base_case_predicate(4, BigInt(1), BigInt(1)), std::domain_error);
}

TEST_CASE("classify examples") {
  const auto c1 = classify(2, BigInt(-5), BigInt(5));
  CHECK(c1.member);
  CHECK(c1.item == 2);
  CHECK(c1.group == GroupStructure({4}));

  const auto c2 = classify(8, BigInt(-1), BigInt(1));
  CHECK(c2.item == 4);
  CHECK(c2.r == 3);
  CHECK(c2.group == GroupStructure({2, 2, 4}));
  CHECK(c2.group == unit_group_invariant_factors(48));

  const auto c3 = classify(5, BigInt(1), BigInt(1));
  CHECK_FALSE(c3.member);
  CHECK(c3.reason == RejectReason::n_has_prime_factor_ge5);

  const auto c4 = classify(2, BigInt(6), BigInt(1));
  CHECK_FALSE(c4.member);
  CHECK(c4.reason == RejectReason::fails_item_conditions);
  CHECK(c4.detail == "a mod 4 not in {0,3}");

  const auto c5 = classify(1, BigInt(2), BigInt(1));
  CHECK_FALSE(c5.member);
  CHECK(c5.detail == "W is not squarefree");

  CHECK(classify(6, BigInt(-1), BigInt(1)).group == GroupStructure({2, 6}));
  CHECK(classify(6, BigInt(-1), BigInt(1)).item == 7);
  CHECK(classify(9, BigInt(1), BigInt(1)).item == 5);
  CHECK(classify(9, BigInt(-1), BigInt(1)).item == 6);
  CHECK(classify(9, BigInt(-1), BigInt(1)).group == GroupStructure({18}));
  CHECK(classify(2, BigInt(4), BigInt(1)).item == 3);
  CHECK_FALSE(classify(1, BigInt(3), BigInt(2)).member);
  CHECK_THROWS_AS(classify(0, BigInt(1), BigInt(1)), std::domain_error);
  CHECK_THROWS_AS(classify(2, BigInt(0), BigInt(1)), std::domain_error);
}

TEST_CASE("property: items are disjoint and group orders equal 2n") {
  // Each triple is tested against every family's defining shape directly.
  for (std::uint64_t n = 1; n <= 64; ++n) {
    if (!lemma_n_filter(n)) continue;
    for (long a = -64; a <= 64; ++a)
      for (long b = -64; b <= 64; ++b) {
        if (a == 0 || b == 0) continue;
        const auto c = classify(n, BigInt(a), BigInt(b));
        const Trinomial t(n, BigInt(a), BigInt(b));
        const unsigned r = t.r(), s = t.s();
        int matches = 0;
        if (n == 1 && c.item == 1) ++matches;
        if (n == 2 && ((a == 4 || a == -4) && b == 2 || (a == -5 && b == 5))) ++matches;
        if (n == 2 && b == 1 && is_squarefree(t.W()) && (mmod(BigInt(a), 4) == 0 || mmod(BigInt(a), 4) == 3)) ++matches;
        if (s == 0 && r >= 2 && a == -1 && b == 1) ++matches;
        if (r == 0 && s >= 1 && a == 1 && b == 1) ++matches;
        if (r == 0 && s >= 1 && a == -1 && b == 1) ++matches;
        if (r >= 1 && s >= 1 && a == -1 && b == 1) ++matches;
        CHECK(matches <= 1);
        CHECK((matches == 1) == c.member);
        if (c.member) CHECK(c.group.order() == 2 * n);
      }
  }
}

TEST_CASE("property: classify agrees with the base cases") {
  for (std::uint64_t d : {1u, 2u, 3u, 6u})
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) {
        if (a == 0 || b == 0) continue;
        const auto c = classify(d, BigInt(a), BigInt(b));
        const auto base = base_case_predicate(d, BigInt(a), BigInt(b));
        CHECK(c.member == base.abelian_monogenic);
        if (c.member) CHECK(c.group == *base.group);
      }
}

TEST_CASE("property: (2^r 3^s, -1, 1) is cyclotomic with the unit group") {
  for (unsigned r = 0; r <= 6; ++r)
    for (unsigned s = 0; r + s <= 6; ++s) {
      const std::uint64_t n = ipow(2, r) * ipow(3, s);
      if (r >= 1 && s >= 1) {
        const auto c = classify(n, BigInt(-1), BigInt(1));
        CHECK(c.item == 7);
        const std::uint64_t N = ipow(2, r + 1) * ipow(3, s + 1);
        CHECK(cyclotomic_recognition(Trinomial(n, BigInt(-1), BigInt(1)).polynomial()) == std::optional<std::uint64_t>(N));
        CHECK(c.group == unit_group_invariant_factors(N));
      }
    }
}
