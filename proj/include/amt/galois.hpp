#pragma once

// Abelian-ness of Gal(f) for irreducible monic f, decided with checkable
// certificates: a Frobenius witness against normality, or the full list of
// roots of f in its stem field together with their composition table.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amt/abelian_group.hpp"
#include "amt/polynomial.hpp"
#include "amt/zfactor.hpp"

namespace amt {

/// Arithmetic in K = Q[t]/(f) for monic f. Elements are RatPolynomials of
/// degree < deg f.
class StemField {
 public:
  explicit StemField(const IntPolynomial& f);

  int degree() const { return modulus_.degree(); }
  const RatPolynomial& modulus() const { return modulus_; }
  RatPolynomial theta() const;

  RatPolynomial reduce(const RatPolynomial& a) const;
  RatPolynomial mul(const RatPolynomial& a, const RatPolynomial& b) const;
  /// Throws std::domain_error for zero.
  RatPolynomial inverse(const RatPolynomial& a) const;
  /// p(e) for a polynomial p and an element e.
  RatPolynomial evaluate(const RatPolynomial& p, const RatPolynomial& e) const;
  RatPolynomial evaluate(const IntPolynomial& p, const RatPolynomial& e) const;

 private:
  RatPolynomial modulus_;
};

/// A root of f in its stem field, written as a polynomial in t = theta.
struct RootExpression {
  RatPolynomial value;

  /// Exact check that f(value) = 0 in Q[t]/(f).
  bool is_root_of(const IntPolynomial& f) const;
  std::string to_string() const { return value.to_string("t"); }
  friend bool operator==(const RootExpression&, const RootExpression&) = default;
};

struct OracleOptions {
  int degree_cap = 12;
  int witness_budget = 100;  // good primes scanned for a nonnormality witness
  std::uint64_t seed = 0;
  ZFactorOptions factor_options{};
};

/// A good prime (f mod p squarefree, p not dividing lc f) at which f has
/// irreducible factors of unequal degree; scans the first `prime_budget`
/// good primes.
std::optional<std::uint64_t> nonnormality_witness(const IntPolynomial& f, int prime_budget);

/// All roots of f in its stem field, theta first. Throws BudgetExceeded
/// above the degree cap or when no shift in [-20, 20] gives a squarefree norm.
std::vector<RootExpression> roots_in_stem_field(const IntPolynomial& f, const OracleOptions& options = {});

/// Res_y(f(y), f(x - s y)); exposed for testing.
IntPolynomial shifted_norm(const IntPolynomial& f, long s);

enum class AbelianStatus { abelian, nonabelian, unknown };
enum class CertificateKind { none, nonnormality_witness, root_count, noncommuting_pair, automorphism_table };

const char* to_string(AbelianStatus s);
const char* to_string(CertificateKind k);

struct AbelianVerdict {
  AbelianStatus status = AbelianStatus::unknown;
  CertificateKind certificate = CertificateKind::none;
  std::optional<std::uint64_t> witness_prime;
  std::vector<RootExpression> roots;
  std::optional<std::pair<std::size_t, std::size_t>> noncommuting;  // indices into roots
  std::vector<std::vector<std::size_t>> table;  // table[i][j]: index of sigma_j(sigma_i(theta))
  std::optional<GroupStructure> group;
  std::string detail;

  /// Re-derives the certificate's claim from f alone.
  bool check(const IntPolynomial& f) const;
};

/// Throws std::domain_error for non-monic or reducible f.
AbelianVerdict abelian_oracle(const IntPolynomial& f, const OracleOptions& options = {});

/// Composition table of a full root list: entry [i][j] is the index of
/// rho_j(rho_i(t)) mod f. Throws std::domain_error if the list is not closed.
std::vector<std::vector<std::size_t>> composition_table(const std::vector<RootExpression>& roots,
                                                        const IntPolynomial& f);

/// Requires a full, commuting root list.
GroupStructure group_structure_from_table(const std::vector<RootExpression>& roots, const IntPolynomial& f);

/// N with Phi_N = f, if any.
std::optional<std::uint64_t> cyclotomic_recognition(const IntPolynomial& f);

}  // namespace amt
