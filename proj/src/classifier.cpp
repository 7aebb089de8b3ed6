#include "amt/classifier.hpp"

#include <stdexcept>

#include "amt/monogenicity.hpp"

namespace amt {

namespace {

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

bool is_pair(const BigInt& a, const BigInt& b, long x, long y) { return a == x && b == y; }

long mod4(const BigInt& v) { return mmod(v, 4).get_si(); }

// Quadratic-field conditions shared by the n = 1 family and its base case.
bool quadratic_conditions(const BigInt& a, const BigInt& b, const BigInt& W, std::string& why) {
  if (!is_squarefree(W)) {
    why = "W is not squarefree";
    return false;
  }
  if (W == 1) {
    // x^2 + a x + b = (x - u)(x - v) when a^2 - 4b = 1
    why = "W = 1, x^2+ax+b splits";
    return false;
  }
  if (mpz_even_p(a.get_mpz_t())) {
    const long ra = mod4(a), rb = mod4(b);
    const bool ok = (ra == 0 && (rb == 1 || rb == 2)) || (ra == 2 && (rb == 2 || rb == 3));
    if (!ok) {
      why = "(a mod 4, b mod 4) not in {(0,1),(0,2),(2,2),(2,3)}";
      return false;
    }
  }
  return true;
}

Classification member(int item, GroupStructure g, unsigned r, unsigned s, std::string detail) {
  Classification c;
  c.member = true;
  c.item = item;
  c.group = std::move(g);
  c.r = r;
  c.s = s;
  c.detail = std::move(detail);
  return c;
}

Classification rejected(RejectReason reason, unsigned r, unsigned s, std::string detail) {
  Classification c;
  c.reason = reason;
  c.r = r;
  c.s = s;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::none: return "none";
    case RejectReason::n_has_prime_factor_ge5: return "n-has-prime-factor-ge-5";
    case RejectReason::fails_item_conditions: return "fails-item-conditions";
  }
  return "?";
}

bool lemma_n_filter(std::uint64_t n) {
  if (n < 1) throw std::domain_error("lemma_n_filter: n must be at least 1");
  while (n % 2 == 0) n /= 2;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

Classification classify(std::uint64_t n, const BigInt& a, const BigInt& b) {
  if (n < 1) throw std::domain_error("classify: n must be at least 1");
  if (a == 0 || b == 0) throw std::domain_error("classify: a and b must be nonzero");
  if (!lemma_n_filter(n)) return rejected(RejectReason::n_has_prime_factor_ge5, 0, 0, "n has a prime factor >= 5");

  const Trinomial t(n, a, b);
  const unsigned r = t.r(), s = t.s();
  const auto fail = [&](std::string why) { return rejected(RejectReason::fails_item_conditions, r, s, std::move(why)); };

  if (n == 1) {
    std::string why;
    if (!quadratic_conditions(a, b, t.W(), why)) return fail(why);
    return member(1, GroupStructure::from_cyclic_orders({2}), r, s, "quadratic");
  }
  if (n == 2) {
    if (is_pair(a, b, 4, 2) || is_pair(a, b, -4, 2) || is_pair(a, b, -5, 5))
      return member(2, GroupStructure::from_cyclic_orders({4}), r, s, "cyclic quartic");
    if (b != 1) return fail("b != 1 and (a,b) not in {(4,2),(-4,2),(-5,5)}");
    const long ra = mod4(a);
    if (ra != 0 && ra != 3) return fail("a mod 4 not in {0,3}");
    if (!is_squarefree(t.W())) return fail("W is not squarefree");
    return member(3, GroupStructure::from_cyclic_orders({2, 2}), r, s, "biquadratic");
  }

  if (b != 1) return fail("b != 1");
  if (s == 0) {
    if (a != -1) return fail("a != -1");
    return member(4, GroupStructure::from_cyclic_orders({2, 2, pow_u64(2, r - 1)}), r, s,
                  "Phi_" + std::to_string(pow_u64(2, r + 1) * 3));
  }
  if (r == 0) {
    const std::uint64_t g = 2 * pow_u64(3, s);
    if (a == 1) return member(5, GroupStructure::from_cyclic_orders({g}), r, s, "Phi_" + std::to_string(pow_u64(3, s + 1)));
    if (a == -1)
      return member(6, GroupStructure::from_cyclic_orders({g}), r, s, "Phi_" + std::to_string(2 * pow_u64(3, s + 1)));
    return fail("a not in {1,-1}");
  }
  if (a != -1) return fail("a != -1");
  return member(7, GroupStructure::from_cyclic_orders({2, 2, pow_u64(2, r - 1), pow_u64(3, s)}), r, s,
                "Phi_" + std::to_string(pow_u64(2, r + 1) * pow_u64(3, s + 1)));
}

BaseCaseResult base_case_predicate(std::uint64_t d, const BigInt& a, const BigInt& b, const ZFactorOptions& options) {
  if (d != 1 && d != 2 && d != 3 && d != 6) throw std::domain_error("base_case_predicate: d must be 1, 2, 3 or 6");
  const Trinomial t(d, a, b);
  BaseCaseResult res;
  if (!is_irreducible_over_Q(t.polynomial(), options)) return res;

  std::optional<GroupStructure> g;
  switch (d) {
    case 1: {
      std::string why;
      if (quadratic_conditions(a, b, t.W(), why)) g = GroupStructure({2});
      break;
    }
    case 2:
      if (is_pair(a, b, 4, 2) || is_pair(a, b, -4, 2) || is_pair(a, b, -5, 5))
        g = GroupStructure({4});
      else if (b == 1 && is_squarefree(t.W()) && (mod4(a) == 0 || mod4(a) == 3))
        g = GroupStructure({2, 2});
      break;
    case 3:
      if (is_pair(a, b, 1, 1) || is_pair(a, b, -1, 1)) g = GroupStructure({6});
      break;
    case 6:
      if (is_pair(a, b, -1, 1)) g = GroupStructure({2, 6});
      break;
  }
  res.abelian_monogenic = g.has_value();
  res.group = g;
  return res;
}

}  // namespace amt
