#pragma once

// Trinomials x^(2n) + a x^n + b, their discriminants, and index
// divisibility via Dedekind's criterion.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amt/integer.hpp"
#include "amt/polynomial.hpp"
#include "amt/prime_field.hpp"
#include "amt/zfactor.hpp"

namespace amt {

class Trinomial {
 public:
  /// Requires n >= 1 and a, b nonzero.
  Trinomial(std::uint64_t n, BigInt a, BigInt b);

  std::uint64_t n() const { return n_; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  unsigned r() const { return r_; }  // v_2(n)
  unsigned s() const { return s_; }  // v_3(n)
  std::uint64_t m() const { return m_; }  // n / (2^r 3^s)
  const BigInt& W() const { return w_; }  // (a^2 - 4b) / gcd(2,a)^2
  std::uint64_t rad_n() const { return rad_; }
  std::uint64_t k() const { return n_ / rad_; }
  BigInt quadratic_discriminant() const { return a_ * a_ - 4 * b_; }

  /// Same (a, b) with a different n.
  Trinomial with_n(std::uint64_t n) const { return Trinomial(n, a_, b_); }

  IntPolynomial polynomial() const;
  std::string to_string() const;

 private:
  std::uint64_t n_;
  BigInt a_, b_;
  unsigned r_ = 0, s_ = 0;
  std::uint64_t m_ = 1, rad_ = 1;
  BigInt w_;
};

enum class DiscriminantMethod { closed_form, resultant, both_agree };
const char* to_string(DiscriminantMethod m);

struct DiscriminantReport {
  BigInt value;
  /// Absent when the discriminant is zero (a^2 = 4b).
  std::optional<FactoredInteger> magnitude_factored;
  DiscriminantMethod computed_by = DiscriminantMethod::closed_form;
};

/// Closed form n^(2n) b^(n-1) (a^2-4b)^n. When 2n <= cross_check_degree the
/// resultant-based discriminant is also computed; a mismatch throws
/// std::logic_error.
DiscriminantReport trinomial_discriminant(const Trinomial& t, int cross_check_degree = 24);

/// Multiplicity of p in the trinomial discriminant, without forming it.
unsigned long trinomial_discriminant_valuation(const Trinomial& t, const BigInt& p);

struct DedekindVerdict {
  std::uint64_t prime = 2;
  bool divides_index = false;
  ModularFactorization reduction;  // f mod p
  IntPolynomial g, h;              // lifts with coefficients in [0, p)
  PrimeFieldPoly t_bar;            // (g h - f)/p mod p
  PrimeFieldPoly gcd;              // gcd(t_bar, g_bar, h_bar)

  /// Recomputes the verdict from the stored data for f.
  bool replay(const IntPolynomial& f) const;
};

/// Dedekind's criterion at p for monic f.
DedekindVerdict dedekind_divides_index(const IntPolynomial& f, const BigInt& p);

struct MonogenicityOptions {
  bool check_irreducible = true;
  IntegerFactorBudget integer_budget{};
  ZFactorOptions factor_options{};
};

struct MonogenicityResult {
  bool monogenic = false;
  std::vector<DedekindVerdict> certificate;  // one entry per tested prime
};

/// Index test at every prime whose square divides disc(f). Throws
/// std::domain_error for non-monic or (when checked) reducible input and
/// BudgetExceeded when disc(f) cannot be factored.
MonogenicityResult is_monogenic(const IntPolynomial& f, const MonogenicityOptions& options = {});

/// Same, with candidate primes read off n, b and a^2-4b.
MonogenicityResult is_monogenic(const Trinomial& t, const MonogenicityOptions& options = {});

struct KkrResult {
  bool monogenic = false;
  bool b_squarefree = false;
  bool index_coprime_to_k = false;  // no prime q | k divides the index
  bool radical_monogenic = false;
  int first_failing = 0;            // 1..3, or 0 when all hold
  std::string reason;
  std::vector<DedekindVerdict> certificate;
};

/// Monogenicity of F_{n,a,b} for n = 2^r 3^s outside {1,2,3,6}, through
/// F_{rad(n),a,b}. All three conditions are evaluated.
KkrResult kkr_monogenic(const Trinomial& t, const MonogenicityOptions& options = {});

}  // namespace amt
