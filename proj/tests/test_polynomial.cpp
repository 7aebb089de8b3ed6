#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "amt/polynomial.hpp"

using namespace amt;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int degree, long bound, bool monic = false) {
  std::uniform_int_distribution<long> d(-bound, bound);
  std::vector<BigInt> c(degree + 1);
  for (auto& v : c) v = d(rng);
  if (monic || c.back() == 0) c.back() = 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("canonical form") {
  IntPolynomial z(std::vector<BigInt>{0, 0});
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  IntPolynomial f(std::vector<BigInt>{1, 2, 0});
  CHECK(f.degree() == 1);
  CHECK(IntPolynomial({2, 0, 4, 0, 1}).to_string() == "x^4 + 4*x^2 + 2");
}

TEST_CASE("arithmetic") {
  CHECK(IntPolynomial({1, 1, 1}) * IntPolynomial({1, -1, 1}) == IntPolynomial({1, 0, 1, 0, 1}));
  CHECK(IntPolynomial({2, 0, 4, 0, 1}).derivative() == IntPolynomial({0, 8, 0, 4}));
  CHECK(IntPolynomial({1, 1, 1}).evaluate(2) == 7);
  CHECK(exact_divide(IntPolynomial({1, 0, 1, 0, 1}), IntPolynomial({1, 1, 1})) == IntPolynomial({1, -1, 1}));
  CHECK_THROWS_AS(exact_divide(IntPolynomial({1, 0, 1}), IntPolynomial({1, 1})), std::domain_error);
  // x^3 prem (2x+1) = lc^3 * remainder
  CHECK(pseudo_remainder(IntPolynomial({0, 0, 0, 1}), IntPolynomial({1, 2})) == IntPolynomial({-1}));
}

TEST_CASE("compose_power") {
  CHECK(compose_power(IntPolynomial({1, 1, 1}), 3) == IntPolynomial({1, 0, 0, 1, 0, 0, 1}));
  CHECK(compose_power(IntPolynomial({1, -1, 1}), 2) == IntPolynomial({1, 0, -1, 0, 1}));
  const IntPolynomial f({3, -2, 5});
  CHECK(compose_power(f, 1) == f);
  CHECK_THROWS_AS(compose_power(f, 0), std::domain_error);
}

TEST_CASE("resultant") {
  CHECK(resultant(IntPolynomial({-2, 1}), IntPolynomial({-3, 1})) == -1);
  CHECK(resultant(IntPolynomial({-1, 0, 1}), IntPolynomial({-4, 0, 1})) == 9);
  CHECK(resultant(IntPolynomial({1, 1, 1}), IntPolynomial({1, 2})) == 3);
  CHECK_THROWS_AS(resultant(IntPolynomial(), IntPolynomial({1, 2})), std::domain_error);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(IntPolynomial({1, 1, 1})) == -3);
  CHECK(discriminant(IntPolynomial({2, 0, 4, 0, 1})) == 2048);
  CHECK_THROWS_AS(discriminant(IntPolynomial({5})), std::domain_error);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    const long a = d(rng), b = d(rng);
    CHECK(discriminant(IntPolynomial({b, a, 1})) == BigInt(a) * a - 4 * BigInt(b));
  }
}

TEST_CASE("cyclotomic") {
  CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic(3) == IntPolynomial({1, 1, 1}));
  CHECK(cyclotomic(9) == IntPolynomial({1, 0, 0, 1, 0, 0, 1}));
  CHECK(cyclotomic(36) == IntPolynomial({1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1}));
  CHECK(cyclotomic(105).coeff(7) == -2);
  CHECK_THROWS_AS(cyclotomic(0), std::domain_error);
}

TEST_CASE("property: product of Phi_d over d | N is x^N - 1") {
  for (std::uint64_t N = 1; N <= 200; ++N) {
    IntPolynomial prod({1});
    for (auto d : divisors(N)) prod = prod * cyclotomic(d);
    CHECK(prod == IntPolynomial::monomial(1, N) - IntPolynomial({1}));
  }
}

TEST_CASE("mignotte_bound") {
  CHECK(mignotte_bound(IntPolynomial({-1, 0, 1})) >= 1);
  CHECK(mignotte_bound(IntPolynomial({1, 0, 1, 0, 1})) >= 1);
  CHECK(mignotte_bound(IntPolynomial({2, 0, 4, 0, 1})) >= 4);
}

TEST_CASE("property: resultant symmetry and method agreement") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 10);
  for (int i = 0; i < 200; ++i) {
    const IntPolynomial f = random_poly(rng, deg(rng), 20), g = random_poly(rng, deg(rng), 20);
    const BigInt fg = resultant(f, g), gf = resultant(g, f);
    const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    CHECK(fg == sign * gf);
    CHECK(resultant_sylvester(f, g) == resultant_subresultant(f, g));
  }
}

TEST_CASE("property: compose_power is multiplicative in k") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const IntPolynomial g = random_poly(rng, 3, 9);
    for (long j = 1; j <= 3; ++j)
      for (long k = 1; k <= 3; ++k) CHECK(compose_power(g, j * k) == compose_power(compose_power(g, j), k));
  }
}

TEST_CASE("gcd over Z and Q") {
  const IntPolynomial a = IntPolynomial({1, 1}) * IntPolynomial({-2, 3});
  const IntPolynomial b = IntPolynomial({1, 1}) * IntPolynomial({5, 0, 1});
  CHECK(gcd(a, b) == IntPolynomial({1, 1}));
  const RatPolynomial ra(a), rb(b);
  CHECK(gcd(ra, rb) == RatPolynomial(IntPolynomial({1, 1})));
  auto [q, r] = divmod(RatPolynomial(IntPolynomial({1, 0, 1})), RatPolynomial(IntPolynomial({1, 2})));
  CHECK(q * RatPolynomial(IntPolynomial({1, 2})) + r == RatPolynomial(IntPolynomial({1, 0, 1})));
  CHECK(r.degree() == 0);
}
