#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amt/monogenicity.hpp"

using namespace amt;

TEST_CASE("Trinomial invariants") {
  const Trinomial t(12, BigInt(-6), BigInt(5));
  CHECK(t.r() == 2);
  CHECK(t.s() == 1);
  CHECK(t.m() == 1);
  CHECK(t.rad_n() == 6);
  CHECK(t.k() == 2);
  CHECK(t.W() == (36 - 20) / 4);
  CHECK(Trinomial(1, BigInt(3), BigInt(1)).W() == 5);
  CHECK(Trinomial(10, BigInt(1), BigInt(1)).m() == 5);
  CHECK(Trinomial(2, BigInt(4), BigInt(2)).polynomial() == IntPolynomial({2, 0, 4, 0, 1}));
  CHECK_THROWS_AS(Trinomial(0, BigInt(1), BigInt(1)), std::domain_error);
  CHECK_THROWS_AS(Trinomial(2, BigInt(0), BigInt(1)), std::domain_error);
  CHECK_THROWS_AS(Trinomial(2, BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("trinomial discriminant") {
  const auto d1 = trinomial_discriminant(Trinomial(1, BigInt(3), BigInt(-7)));
  CHECK(d1.value == 9 + 28);
  CHECK(d1.computed_by == DiscriminantMethod::both_agree);

  const auto d2 = trinomial_discriminant(Trinomial(2, BigInt(4), BigInt(2)));
  CHECK(d2.value == 2048);
  REQUIRE(d2.magnitude_factored);
  CHECK(d2.magnitude_factored->to_string() == "2^11");

  const auto d3 = trinomial_discriminant(Trinomial(3, BigInt(1), BigInt(1)));
  CHECK(abs(d3.value) == 19683);
  CHECK(d3.value == discriminant(IntPolynomial({1, 0, 0, 1, 0, 0, 1})));

  const auto d0 = trinomial_discriminant(Trinomial(2, BigInt(2), BigInt(1)));
  CHECK(d0.value == 0);
  CHECK_FALSE(d0.magnitude_factored);

  const auto big = trinomial_discriminant(Trinomial(100, BigInt(3), BigInt(5)));
  CHECK(big.computed_by == DiscriminantMethod::closed_form);
  CHECK(big.magnitude_factored->value() == abs(big.value));
}

TEST_CASE("property: closed form matches the resultant") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-1000, 1000);
  std::uniform_int_distribution<int> nd(1, 8);
  for (int i = 0; i < 150; ++i) {
    long a = c(rng), b = c(rng);
    if (a == 0) a = 1;
    if (b == 0) b = -1;
    const Trinomial t(nd(rng), BigInt(a), BigInt(b));
    CHECK(trinomial_discriminant(t, 0).value == discriminant(t.polynomial()));
  }
}

TEST_CASE("dedekind examples") {
  const auto v1 = dedekind_divides_index(IntPolynomial({2, 0, 4, 0, 1}), BigInt(2));
  CHECK_FALSE(v1.divides_index);
  CHECK(v1.t_bar.is_one());

  const auto v2 = dedekind_divides_index(IntPolynomial({1, 0, 1}), BigInt(2));
  CHECK_FALSE(v2.divides_index);
  CHECK(v2.t_bar == PrimeFieldPoly(2, {0, 1}));

  const auto v3 = dedekind_divides_index(IntPolynomial({3, 0, 1}), BigInt(2));
  CHECK(v3.divides_index);
  CHECK(v3.t_bar == PrimeFieldPoly(2, {1, 1}));

  CHECK_THROWS_AS(dedekind_divides_index(IntPolynomial({3, 0, 2}), BigInt(2)), std::domain_error);
  CHECK_THROWS_AS(dedekind_divides_index(IntPolynomial({3, 0, 1}), BigInt(4)), std::domain_error);
}

TEST_CASE("dedekind verdicts replay from stored data") {
  for (const IntPolynomial& f : {IntPolynomial({3, 0, 1}), IntPolynomial({2, 0, 4, 0, 1}), IntPolynomial({1, 0, 6, 0, 1}),
                                 IntPolynomial({5, 0, 0, 0, -5, 0, 0, 0, 1})})
    for (long p : {2, 3, 5}) {
      const auto v = dedekind_divides_index(f, BigInt(p));
      CHECK(v.replay(f));
      DedekindVerdict forged = v;
      forged.divides_index = !v.divides_index;
      CHECK_FALSE(forged.replay(f));
    }
}

TEST_CASE("is_monogenic examples") {
  const auto r1 = is_monogenic(IntPolynomial({1, 1, 1}));
  CHECK(r1.monogenic);
  CHECK(r1.certificate.empty());
  CHECK(is_monogenic(IntPolynomial({2, 0, 4, 0, 1})).monogenic);
  CHECK_FALSE(is_monogenic(IntPolynomial({3, 0, 1})).monogenic);
  CHECK_THROWS_AS(is_monogenic(IntPolynomial({1, 2, 1})), std::domain_error);
  CHECK_THROWS_AS(is_monogenic(IntPolynomial({1, 0, 2})), std::domain_error);
}

TEST_CASE("trinomial and generic monogenicity agree") {
  for (long n = 1; n <= 4; ++n)
    for (long a = -6; a <= 6; ++a)
      for (long b = -6; b <= 6; ++b) {
        if (a == 0 || b == 0) continue;
        const Trinomial t(n, BigInt(a), BigInt(b));
        if (!is_irreducible_over_Q(t.polynomial())) continue;
        CHECK(is_monogenic(t).monogenic == is_monogenic(t.polynomial()).monogenic);
      }
}

TEST_CASE("kkr examples") {
  const auto k1 = kkr_monogenic(Trinomial(4, BigInt(-1), BigInt(1)));
  CHECK(k1.monogenic);
  CHECK(k1.first_failing == 0);

  const auto k2 = kkr_monogenic(Trinomial(4, BigInt(4), BigInt(2)));
  CHECK(k2.monogenic);

  const auto k3 = kkr_monogenic(Trinomial(4, BigInt(6), BigInt(1)));
  CHECK_FALSE(k3.monogenic);
  CHECK(k3.b_squarefree);
  CHECK_FALSE(k3.index_coprime_to_k);
  CHECK_FALSE(k3.radical_monogenic);
  CHECK(k3.first_failing == 2);

  CHECK_THROWS_AS(kkr_monogenic(Trinomial(6, BigInt(-1), BigInt(1))), std::domain_error);
  CHECK_THROWS_AS(kkr_monogenic(Trinomial(20, BigInt(-1), BigInt(1))), std::domain_error);
  CHECK_THROWS_AS(kkr_monogenic(Trinomial(4, BigInt(2), BigInt(1))), std::domain_error);  // (x^4+1)^2
}

TEST_CASE("property: squarefree discriminant means monogenic with no certificate") {
  for (long a = -10; a <= 10; ++a)
    for (long b = -10; b <= 10; ++b) {
      if (a == 0 || b == 0) continue;
      const IntPolynomial f({b, a, 1});
      if (!is_irreducible_over_Q(f)) continue;
      if (is_squarefree(discriminant(f))) {
        const auto r = is_monogenic(f);
        CHECK(r.monogenic);
        CHECK(r.certificate.empty());
      }
    }
}
