#pragma once

// Dense univariate polynomials over Z and Q.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "amt/integer.hpp"

namespace amt {

/// Polynomial with integer coefficients in ascending degree order.
/// Canonical form: no trailing zero; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  const BigInt& leading() const;
  /// Number of nonzero coefficients.
  std::size_t weight() const;

  BigInt content() const;  // nonnegative gcd of the coefficients
  IntPolynomial primitive_part() const;  // positive leading coefficient
  IntPolynomial derivative() const;
  BigInt evaluate(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

  /// e.g. "x^4 + 4*x^2 + 2"
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// f / g when g divides f in Z[x]; throws std::domain_error otherwise.
IntPolynomial exact_divide(const IntPolynomial& f, const IntPolynomial& g);

/// Attempts f / g over Z. Returns false if g does not divide f, or if a
/// quotient coefficient exceeds `bound` in absolute value (bound 0: none).
bool try_exact_divide(const IntPolynomial& f, const IntPolynomial& g, IntPolynomial& quotient,
                      const BigInt& bound = 0);

/// lc(g)^(deg f - deg g + 1) * f mod g.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Greatest common divisor in Z[x], primitive with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g);

/// g(x^k).
IntPolynomial compose_power(const IntPolynomial& g, long k);

/// f(g(x)).
IntPolynomial compose(const IntPolynomial& f, const IntPolynomial& g);

/// Resultant. Dispatches to the Sylvester determinant for small degrees and
/// to the subresultant sequence otherwise.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);
BigInt resultant_subresultant(const IntPolynomial& f, const IntPolynomial& g);
BigInt resultant_sylvester(const IntPolynomial& f, const IntPolynomial& g);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f).
BigInt discriminant(const IntPolynomial& f);

/// The N-th cyclotomic polynomial.
IntPolynomial cyclotomic(std::uint64_t n);

/// A bound on the absolute value of every coefficient of every factor of f
/// in Z[x] whose leading coefficient divides lc(f).
BigInt mignotte_bound(const IntPolynomial& f);

// ---------------------------------------------------------------------------

/// Polynomial with rational coefficients in ascending degree order.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> ascending);
  explicit RatPolynomial(const IntPolynomial& f);

  static RatPolynomial constant(const Rational& c);
  static RatPolynomial monomial(const Rational& c, std::size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const;

  RatPolynomial monic() const;
  Rational evaluate(const Rational& x) const;
  /// Least common denominator of the coefficients.
  BigInt denominator() const;

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  RatPolynomial& operator*=(const Rational& c);
  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(RatPolynomial a, const Rational& c) { return a *= c; }
  RatPolynomial operator-() const;
  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& f, const RatPolynomial& g);
RatPolynomial remainder(const RatPolynomial& f, const RatPolynomial& g);

/// Monic gcd over Q (zero for gcd(0, 0)).
RatPolynomial gcd(const RatPolynomial& f, const RatPolynomial& g);

}  // namespace amt
