#pragma once

// Arbitrary-precision integer utilities: prime decomposition, squarefree
// tests, radicals and the least nonnegative residue.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace amt {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when an operation gives up after exhausting its work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;
};

/// Signed prime decomposition of a nonzero integer.
///
/// Primes are strictly ascending and each exponent is at least one. The
/// constructor validates these invariants; zero cannot be represented.
class FactoredInteger {
 public:
  FactoredInteger(int sign, std::vector<PrimePower> factors);

  int sign() const { return sign_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  BigInt value() const;
  BigInt radical() const;
  bool is_squarefree() const;
  unsigned long valuation(const BigInt& prime) const;
  std::vector<BigInt> primes() const;

  std::string to_string() const;

 private:
  int sign_ = 1;
  std::vector<PrimePower> factors_;
};

struct IntegerFactorBudget {
  std::uint64_t trial_bound = 1000000;
  std::uint64_t rho_iterations = 5000000;
  std::uint64_t seed = 0x5eed;
};

/// Trial division, then Pollard-Brent rho with a seeded sequence of
/// polynomial constants. Throws std::domain_error for 0 and BudgetExceeded
/// when rho cannot split a composite cofactor within the budget.
FactoredInteger factor_integer(const BigInt& m, const IntegerFactorBudget& budget = {});

bool is_prime(const BigInt& m);

/// is_squarefree(0) is false and is_squarefree(+-1) is true.
bool is_squarefree(const BigInt& m);

/// Product of the distinct primes dividing m; radical(1) == 1.
BigInt radical(const BigInt& m);

/// The representative of r modulo m in [0, m). Requires m >= 2.
BigInt mmod(const BigInt& r, const BigInt& m);

/// Exponent of prime p in m (m != 0).
unsigned long valuation(const BigInt& m, const BigInt& p);

// Small-integer helpers.

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n
bool is_prime_u64(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
int moebius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);  // ascending

struct SmallPrimePower {
  std::uint64_t prime;
  unsigned exponent;
};
std::vector<SmallPrimePower> factor_u64(std::uint64_t n);

/// All N with euler_phi(N) == value, ascending.
std::vector<std::uint64_t> inverse_totient(std::uint64_t value);

bool fits_u64(const BigInt& v);
std::uint64_t to_u64(const BigInt& v);
BigInt from_u64(std::uint64_t v);
BigInt from_i64(std::int64_t v);

}  // namespace amt
