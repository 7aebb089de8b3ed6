#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amt/galois.hpp"
#include "amt/monogenicity.hpp"

using namespace amt;

namespace {

RatPolynomial rp(std::initializer_list<long> c) { return RatPolynomial(IntPolynomial(c)); }

bool contains(const std::vector<RootExpression>& roots, const RatPolynomial& v) {
  for (const auto& r : roots)
    if (r.value == v) return true;
  return false;
}

}  // namespace

TEST_CASE("stem field arithmetic") {
  const StemField K(IntPolynomial({1, 1, 1}));
  const RatPolynomial t = K.theta();
  CHECK(K.mul(t, t) == rp({-1, -1}));
  CHECK(K.mul(t, K.inverse(t)) == rp({1}));
  CHECK(K.evaluate(IntPolynomial({1, 1, 1}), t).is_zero());
  CHECK_THROWS_AS(K.inverse(RatPolynomial()), std::domain_error);
  CHECK_THROWS_AS(StemField(IntPolynomial({1, 2})), std::domain_error);
}

TEST_CASE("nonnormality witness") {
  const auto w1 = nonnormality_witness(IntPolynomial({2, 0, -5, 0, 1}), 50);
  CHECK(w1.has_value());
  CHECK_FALSE(nonnormality_witness(IntPolynomial({5, 0, -5, 0, 1}), 100).has_value());
  const auto w3 = nonnormality_witness(IntPolynomial({-2, 0, 0, 1}), 10);
  REQUIRE(w3.has_value());
  CHECK(*w3 == 5);
}

TEST_CASE("shifted norm is the resultant") {
  const IntPolynomial f({1, 1, 1});
  const IntPolynomial N = shifted_norm(f, 1);
  CHECK(N.degree() == 4);
  for (long x0 = -3; x0 <= 3; ++x0)
    CHECK(N.evaluate(x0) == resultant(f, compose(f, IntPolynomial({x0, -1}))));
}

TEST_CASE("roots in the stem field") {
  const auto r1 = roots_in_stem_field(IntPolynomial({1, 1, 1}));
  REQUIRE(r1.size() == 2);
  CHECK(r1[0].value == rp({0, 1}));
  CHECK(contains(r1, rp({-1, -1})));

  const IntPolynomial phi12({1, 0, -1, 0, 1});
  const auto r2 = roots_in_stem_field(phi12);
  REQUIRE(r2.size() == 4);
  for (const auto& v : {rp({0, 1}), rp({0, -1}), rp({0, -1, 0, 1}), rp({0, 1, 0, -1})}) CHECK(contains(r2, v));

  const IntPolynomial x4p2({2, 0, 0, 0, 1});
  const auto r3 = roots_in_stem_field(x4p2);
  REQUIRE(r3.size() == 2);
  CHECK(contains(r3, rp({0, 1})));
  CHECK(contains(r3, rp({0, -1})));

  for (const auto& f : {IntPolynomial({1, 1, 1}), phi12, x4p2})
    for (const auto& r : roots_in_stem_field(f)) CHECK(r.is_root_of(f));

  OracleOptions small;
  small.degree_cap = 3;
  CHECK_THROWS_AS(roots_in_stem_field(phi12, small), BudgetExceeded);
}

TEST_CASE("abelian oracle examples") {
  const IntPolynomial c4({5, 0, -5, 0, 1});
  const auto v1 = abelian_oracle(c4);
  CHECK(v1.status == AbelianStatus::abelian);
  REQUIRE(v1.group);
  CHECK(*v1.group == GroupStructure({4}));
  CHECK(v1.check(c4));

  const IntPolynomial v4({1, 0, 4, 0, 1});
  const auto v2 = abelian_oracle(v4);
  CHECK(v2.status == AbelianStatus::abelian);
  CHECK(*v2.group == GroupStructure({2, 2}));
  CHECK(v2.check(v4));

  OracleOptions no_scan;
  no_scan.witness_budget = 0;
  const IntPolynomial d4({2, 0, 0, 0, 1});
  const auto v3 = abelian_oracle(d4, no_scan);
  CHECK(v3.status == AbelianStatus::nonabelian);
  CHECK(v3.certificate == CertificateKind::root_count);
  CHECK(v3.roots.size() == 2);
  CHECK(v3.check(d4));

  const auto v4w = abelian_oracle(d4);
  CHECK(v4w.certificate == CertificateKind::nonnormality_witness);
  CHECK(v4w.check(d4));

  CHECK_THROWS_AS(abelian_oracle(IntPolynomial({1, 0, 1, 0, 1})), std::domain_error);
  CHECK_THROWS_AS(abelian_oracle(IntPolynomial({1, 0, 2})), std::domain_error);

  OracleOptions capped;
  capped.degree_cap = 2;
  capped.witness_budget = 0;
  CHECK(abelian_oracle(c4, capped).status == AbelianStatus::unknown);
}

TEST_CASE("noncommuting pair certificate") {
  // a root of x^6 + 108 generates Q(cbrt 2, sqrt -3), normal with group S3
  const IntPolynomial f({108, 0, 0, 0, 0, 0, 1});
  OracleOptions no_scan;
  no_scan.witness_budget = 0;
  const auto v = abelian_oracle(f, no_scan);
  CHECK(v.status == AbelianStatus::nonabelian);
  CHECK(v.certificate == CertificateKind::noncommuting_pair);
  CHECK(v.roots.size() == 6);
  CHECK(v.check(f));
  AbelianVerdict forged = v;
  forged.status = AbelianStatus::abelian;
  CHECK_FALSE(forged.check(f));
}

TEST_CASE("group structure from tables") {
  CHECK(group_structure_from_table(roots_in_stem_field(cyclotomic(5)), cyclotomic(5)) == GroupStructure({4}));
  CHECK(group_structure_from_table(roots_in_stem_field(cyclotomic(24)), cyclotomic(24)) == GroupStructure({2, 2, 2}));
  CHECK(group_structure_from_table(roots_in_stem_field(cyclotomic(36)), cyclotomic(36)) == GroupStructure({2, 6}));
  const auto partial = roots_in_stem_field(IntPolynomial({2, 0, 0, 0, 1}));
  CHECK_THROWS_AS(group_structure_from_table(partial, IntPolynomial({2, 0, 0, 0, 1})), std::domain_error);
}

TEST_CASE("property: cyclotomic tables match unit groups") {
  for (std::uint64_t N = 3; N <= 42; ++N) {
    if (euler_phi(N) > 12) continue;
    const IntPolynomial phi = cyclotomic(N);
    const auto roots = roots_in_stem_field(phi);
    REQUIRE(roots.size() == static_cast<std::size_t>(phi.degree()));
    for (const auto& r : roots) CHECK(r.is_root_of(phi));
    const auto table = composition_table(roots, phi);
    // closure, identity and inverses
    for (std::size_t i = 0; i < roots.size(); ++i) {
      bool has_inverse = false;
      for (std::size_t j = 0; j < roots.size(); ++j) has_inverse = has_inverse || table[i][j] == 0;
      CHECK(has_inverse);
      CHECK(table[0][i] == i);
    }
    CHECK(group_structure_from_table(roots, phi) == unit_group_invariant_factors(N));
  }
}

TEST_CASE("property: witness implies an incomplete root list") {
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) {
      if (a == 0 || b == 0) continue;
      for (std::uint64_t n : {2u, 3u}) {
        const IntPolynomial f = Trinomial(n, BigInt(a), BigInt(b)).polynomial();
        if (!is_irreducible_over_Q(f)) continue;
        if (nonnormality_witness(f, 100)) CHECK(roots_in_stem_field(f).size() < static_cast<std::size_t>(f.degree()));
      }
    }
}

TEST_CASE("property: abelian verdicts are closed under divisors of n") {
  for (std::uint64_t n : {2u, 4u, 6u})
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b) {
        if (a == 0 || b == 0) continue;
        const Trinomial t(n, BigInt(a), BigInt(b));
        if (!is_irreducible_over_Q(t.polynomial())) continue;
        if (abelian_oracle(t.polynomial()).status != AbelianStatus::abelian) continue;
        for (auto d : divisors(n)) CHECK(abelian_oracle(t.with_n(d).polynomial()).status == AbelianStatus::abelian);
      }
}

TEST_CASE("cyclotomic recognition") {
  CHECK(cyclotomic_recognition(IntPolynomial({1, 0, 0, 1, 0, 0, 1})) == std::optional<std::uint64_t>(9));
  CHECK(cyclotomic_recognition(cyclotomic(36)) == std::optional<std::uint64_t>(36));
  CHECK_FALSE(cyclotomic_recognition(IntPolynomial({1, 0, 1, 0, 1})).has_value());
  CHECK(cyclotomic_recognition(IntPolynomial({1, 1})) == std::optional<std::uint64_t>(2));
}
