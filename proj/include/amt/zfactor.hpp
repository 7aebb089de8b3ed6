#pragma once

// Factorization of integer polynomials (Zassenhaus): squarefree
// decomposition, modular factorization at a well-chosen prime, quadratic
// Hensel lifting, and subset recombination.

#include <cstdint>
#include <vector>

#include "amt/polynomial.hpp"
#include "amt/prime_field.hpp"

namespace amt {

struct IntFactor {
  IntPolynomial factor;  // primitive, positive leading coefficient
  unsigned multiplicity = 0;
};

struct IntFactorization {
  BigInt content;  // carries the sign of the input
  std::vector<IntFactor> factors;

  IntPolynomial product() const;
  std::vector<int> degrees() const;  // with multiplicity, ascending
};

struct ZFactorOptions {
  std::uint64_t seed = 0;
  /// Cap on recombination subsets tried; exceeding it throws BudgetExceeded.
  std::uint64_t max_subsets = 2000000;
  /// Good primes examined when choosing the factoring prime.
  int candidate_primes = 10;
};

IntFactorization factor_over_Z(const IntPolynomial& f, const ZFactorOptions& options = {});

/// True iff f factors as a single irreducible with multiplicity one and
/// content +-1. Requires deg f >= 1.
bool is_irreducible_over_Q(const IntPolynomial& f, const ZFactorOptions& options = {});

/// Squarefree decomposition of a primitive polynomial over Z (Yun).
std::vector<IntFactor> squarefree_decomposition(const IntPolynomial& f);

/// Sound one-sided test: true proves f squarefree (some prime p not dividing
/// lc(f) leaves f mod p squarefree). False is inconclusive.
bool squarefree_by_reduction(const IntPolynomial& f, int primes_to_try = 8);

/// Lifts f = lc(f) * prod(factors) mod p (factors monic, pairwise coprime)
/// to a factorization modulo p^(2^j) >= `at_least`. Returns the lifted monic
/// factors and sets `modulus`.
std::vector<IntPolynomial> hensel_lift(const IntPolynomial& f, const std::vector<PrimeFieldPoly>& factors,
                                       const BigInt& at_least, BigInt& modulus);

}  // namespace amt
