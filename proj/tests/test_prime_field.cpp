#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amt/prime_field.hpp"

using namespace amt;

namespace {

PrimeFieldPoly random_poly(std::mt19937_64& rng, std::uint64_t p, int degree) {
  std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
  std::vector<std::uint64_t> c(degree + 1);
  for (auto& v : c) v = d(rng);
  if (c.back() == 0) c.back() = 1;
  return PrimeFieldPoly(p, c);
}

}  // namespace

TEST_CASE("reduce_mod_p") {
  CHECK(reduce_mod_p(IntPolynomial({2, 0, 4, 0, 1}), BigInt(2)) == PrimeFieldPoly(2, {0, 0, 0, 0, 1}));
  CHECK(reduce_mod_p(IntPolynomial({1, 1, 1}), BigInt(3)) == PrimeFieldPoly(3, {1, 1, 1}));
  CHECK(reduce_mod_p(IntPolynomial({1, 0, 6, 0, 1}), BigInt(2)) == PrimeFieldPoly(2, {1, 0, 0, 0, 1}));
  CHECK(reduce_mod_p(IntPolynomial({-1, 0, 1}), BigInt(5)) == PrimeFieldPoly(5, {4, 0, 1}));
  CHECK_THROWS_AS(reduce_mod_p(IntPolynomial({1, 1}), BigInt(4)), std::domain_error);
}

TEST_CASE("factor_mod_p examples") {
  auto f1 = factor_mod_p(PrimeFieldPoly(2, {1, 0, 0, 0, 1}));
  REQUIRE(f1.factors.size() == 1);
  CHECK(f1.factors[0].factor == PrimeFieldPoly(2, {1, 1}));
  CHECK(f1.factors[0].multiplicity == 4);

  auto f2 = factor_mod_p(PrimeFieldPoly(3, {1, 1, 1}));
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].factor == PrimeFieldPoly(3, {2, 1}));
  CHECK(f2.factors[0].multiplicity == 2);

  auto f3 = factor_mod_p(reduce_mod_p(IntPolynomial({1, 0, -1, 0, 1}), std::uint64_t{5}));
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0].factor.degree() == 2);
  CHECK(f3.factors[1].factor.degree() == 2);
  CHECK(f3.factors[0].multiplicity == 1);
  CHECK_FALSE(f3.factors[0].factor == f3.factors[1].factor);
}

TEST_CASE("gcd_mod_p") {
  CHECK(gcd_mod_p(PrimeFieldPoly(5, {4, 0, 1}), PrimeFieldPoly(5, {4, 1})) == PrimeFieldPoly(5, {4, 1}));
  CHECK(gcd_mod_p(PrimeFieldPoly(2, {1, 1}), PrimeFieldPoly::one(2)).is_one());
  const PrimeFieldPoly x1(2, {1, 1});
  CHECK(gcd_mod_p(x1 * x1, x1 * x1 * x1) == x1 * x1);
  CHECK(gcd_mod_p(PrimeFieldPoly::zero(7), PrimeFieldPoly::zero(7)).is_zero());
  CHECK_THROWS_AS(gcd_mod_p(PrimeFieldPoly(2, {1}), PrimeFieldPoly(3, {1})), std::domain_error);
}

TEST_CASE("extended gcd and inverse") {
  const PrimeFieldPoly f(7, {3, 0, 1, 5}), g(7, {1, 2});
  auto e = extended_gcd_mod_p(f, g);
  CHECK(e.s * f + e.t * g == e.gcd);
  CHECK(mod_inverse(3, 7) == 5);
}

TEST_CASE("property: factorization reconstructs and factors are irreducible") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> deg(1, 24);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 13u}) {
    for (int i = 0; i < 40; ++i) {
      PrimeFieldPoly f = random_poly(rng, p, deg(rng));
      if (i % 4 == 0) f = f * random_poly(rng, p, 2) * random_poly(rng, p, 2);  // force repeats sometimes
      if (i % 4 == 1) {
        const PrimeFieldPoly g = random_poly(rng, p, 3);
        f = f * g * g;
      }
      const auto fac = factor_mod_p(f, i);
      CHECK(scale(fac.product(), 1) == f);
      for (const auto& mf : fac.factors) {
        CHECK(mf.factor.leading() == 1);
        CHECK(is_irreducible_mod_p(mf.factor));
      }
      if (i % 8 == 0)
        for (const auto& mf : fac.factors) {
          const auto self = factor_mod_p(mf.factor, 99);
          REQUIRE(self.factors.size() == 1);
          CHECK(self.factors[0].multiplicity == 1);
        }
      CHECK(factor_mod_p(f, i + 1000).degrees() == fac.degrees());
      CHECK(factor_mod_p(f, i + 1000).factors.size() == fac.factors.size());
    }
  }
}

TEST_CASE("large prime arithmetic") {
  const std::uint64_t p = 4611686018427388039ULL;  // prime > 2^61
  std::mt19937_64 rng(17);
  const PrimeFieldPoly f = random_poly(rng, p, 8);
  const auto fac = factor_mod_p(f, 1);
  CHECK(fac.product() == f);
}

TEST_CASE("Frobenius map matches powering") {
  std::mt19937_64 rng(19);
  for (std::uint64_t p : {2u, 3u, 101u}) {
    PrimeFieldPoly f = random_poly(rng, p, 20);
    f = f.monic();
    FrobeniusMap frob(f);
    CHECK(frob.x_to_p() == powmod(PrimeFieldPoly::x(p), BigInt(static_cast<unsigned long>(p)), f));
    const PrimeFieldPoly h = remainder(random_poly(rng, p, 25), f);
    CHECK(frob.apply(h) == powmod(h, BigInt(static_cast<unsigned long>(p)), f));
  }
  // sparse modulus
  const PrimeFieldPoly tri = reduce_mod_p(IntPolynomial::monomial(1, 60) + IntPolynomial::monomial(3, 30) + IntPolynomial({5}),
                                          std::uint64_t{7});
  FrobeniusMap frob(tri);
  const PrimeFieldPoly h = remainder(random_poly(rng, 7, 70), tri);
  CHECK(frob.apply(h) == powmod(h, BigInt(7), tri));
}

TEST_CASE("degree pattern and irreducibility") {
  CHECK(factor_degree_pattern(reduce_mod_p(IntPolynomial({-2, 0, 0, 1}), std::uint64_t{5})) == std::vector<int>{1, 2});
  CHECK(is_irreducible_mod_p(PrimeFieldPoly(2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible_mod_p(PrimeFieldPoly(2, {1, 0, 1})));
  CHECK(is_squarefree_mod_p(PrimeFieldPoly(5, {1, 0, 1})));
  CHECK_FALSE(is_squarefree_mod_p(PrimeFieldPoly(2, {1, 0, 1})));
}
