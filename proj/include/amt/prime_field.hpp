#pragma once

// Polynomials over the prime field F_p and their complete factorization.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "amt/polynomial.hpp"

namespace amt {

/// Polynomial over F_p, p < 2^63, coefficients in [0, p), ascending order,
/// no trailing zero.
class PrimeFieldPoly {
 public:
  PrimeFieldPoly() = default;
  PrimeFieldPoly(std::uint64_t p, std::vector<std::uint64_t> ascending);

  static PrimeFieldPoly zero(std::uint64_t p) { return PrimeFieldPoly(p, {}); }
  static PrimeFieldPoly one(std::uint64_t p) { return PrimeFieldPoly(p, {1}); }
  static PrimeFieldPoly x(std::uint64_t p) { return PrimeFieldPoly(p, {0, 1}); }
  static PrimeFieldPoly monomial(std::uint64_t p, std::uint64_t c, std::size_t k);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::size_t weight() const;

  PrimeFieldPoly monic() const;
  PrimeFieldPoly derivative() const;
  std::uint64_t evaluate(std::uint64_t x) const;
  /// Integer lift with coefficients in [0, p).
  IntPolynomial lift() const;

  friend bool operator==(const PrimeFieldPoly& a, const PrimeFieldPoly& b) {
    return a.p_ == b.p_ && a.c_ == b.c_;
  }
  /// Canonical order: by degree, then coefficients from the top down.
  friend bool operator<(const PrimeFieldPoly& a, const PrimeFieldPoly& b);

  std::string to_string() const;

 private:
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

// Arithmetic. Operands must share a modulus (std::domain_error otherwise).
PrimeFieldPoly operator+(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly operator-(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly operator*(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly scale(const PrimeFieldPoly& a, std::uint64_t c);
std::pair<PrimeFieldPoly, PrimeFieldPoly> divmod(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly remainder(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly exact_quotient(const PrimeFieldPoly& a, const PrimeFieldPoly& b);
PrimeFieldPoly mulmod(const PrimeFieldPoly& a, const PrimeFieldPoly& b, const PrimeFieldPoly& m);
PrimeFieldPoly powmod(const PrimeFieldPoly& base, const BigInt& e, const PrimeFieldPoly& m);

/// Monic gcd; gcd(0, 0) = 0.
PrimeFieldPoly gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

/// s*f + t*g = gcd(f, g) (monic).
struct ExtendedGcd {
  PrimeFieldPoly gcd, s, t;
};
ExtendedGcd extended_gcd_mod_p(const PrimeFieldPoly& f, const PrimeFieldPoly& g);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

/// Coefficientwise reduction; throws std::domain_error if p is not a prime
/// below 2^63.
PrimeFieldPoly reduce_mod_p(const IntPolynomial& f, const BigInt& p);
PrimeFieldPoly reduce_mod_p(const IntPolynomial& f, std::uint64_t p);

/// The map h -> h^p mod f for a fixed monic f. Chooses between the Frobenius
/// matrix, the x -> x^p substitution, and square-and-multiply by cost.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const PrimeFieldPoly& f);
  PrimeFieldPoly apply(const PrimeFieldPoly& h) const;
  const PrimeFieldPoly& x_to_p() const { return xp_; }

 private:
  enum class Strategy { matrix, substitute, power };
  PrimeFieldPoly f_;
  PrimeFieldPoly xp_;
  Strategy strategy_ = Strategy::power;
  std::vector<std::vector<std::uint64_t>> rows_;  // rows_[i] = x^(i p) mod f
};

struct ModFactor {
  PrimeFieldPoly factor;  // monic irreducible
  unsigned multiplicity = 0;
};

struct ModularFactorization {
  std::uint64_t modulus = 2;
  std::uint64_t unit = 1;  // leading coefficient of the input
  std::vector<ModFactor> factors;
  PrimeFieldPoly product() const;
  /// Sorted multiset of irreducible factor degrees, with multiplicity.
  std::vector<int> degrees() const;
};

/// Squarefree decomposition -> distinct-degree splitting -> equal-degree
/// splitting driven by `seed`. Output is sorted, so it does not depend on
/// the seed.
ModularFactorization factor_mod_p(const PrimeFieldPoly& f, std::uint64_t seed = 0);

/// Squarefree decomposition of a nonzero polynomial: pairwise coprime monic
/// squarefree parts with distinct multiplicities.
std::vector<ModFactor> squarefree_decomposition(const PrimeFieldPoly& f);

/// For monic squarefree f: pairs (product of all irreducible factors of
/// degree d, d), ascending in d.
std::vector<std::pair<PrimeFieldPoly, int>> distinct_degree_factorization(const PrimeFieldPoly& f);

/// Splits a monic squarefree product of irreducibles of common degree d.
std::vector<PrimeFieldPoly> equal_degree_factorization(const PrimeFieldPoly& f, int d, std::uint64_t seed);

bool is_squarefree_mod_p(const PrimeFieldPoly& f);

/// Rabin's test; f nonzero of degree >= 1.
bool is_irreducible_mod_p(const PrimeFieldPoly& f);

/// Sorted irreducible factor degrees of a squarefree polynomial.
std::vector<int> factor_degree_pattern(const PrimeFieldPoly& f);

}  // namespace amt
