#include "amt/abelian_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "amt/integer.hpp"

namespace amt {

namespace {

// Invariant factors from per-prime exponent lists (elementary divisors).
std::vector<std::uint64_t> assemble(std::map<std::uint64_t, std::vector<unsigned>> exponents) {
  std::size_t t = 0;
  for (auto& [p, es] : exponents) {
    std::sort(es.rbegin(), es.rend());
    t = std::max(t, es.size());
  }
  // factors[0] is the largest invariant factor.
  std::vector<std::uint64_t> factors(t, 1);
  for (const auto& [p, es] : exponents)
    for (std::size_t i = 0; i < es.size(); ++i)
      for (unsigned k = 0; k < es[i]; ++k) factors[i] *= p;
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

}  // namespace

GroupStructure::GroupStructure(std::vector<std::uint64_t> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw std::domain_error("GroupStructure: invariant factors must be at least 2");
    if (i > 0 && factors_[i] % factors_[i - 1] != 0)
      throw std::domain_error("GroupStructure: invariant factors must form a divisibility chain");
  }
}

GroupStructure GroupStructure::from_cyclic_orders(const std::vector<std::uint64_t>& orders) {
  std::map<std::uint64_t, std::vector<unsigned>> exponents;
  for (std::uint64_t n : orders) {
    if (n == 0) throw std::domain_error("GroupStructure: cyclic order must be positive");
    if (n == 1) continue;
    for (const auto& [p, e] : factor_u64(n)) exponents[p].push_back(e);
  }
  return GroupStructure(assemble(std::move(exponents)));
}

GroupStructure GroupStructure::from_order_census(const std::map<std::uint64_t, std::uint64_t>& census) {
  std::uint64_t total = 0;
  for (const auto& [ord, count] : census) total += count;
  if (total == 0 || census.count(1) == 0 || census.at(1) != 1)
    throw std::domain_error("order census must contain exactly one identity");

  std::map<std::uint64_t, std::vector<unsigned>> exponents;
  for (const auto& [p, e_total] : factor_u64(total)) {
    if (total == 1) break;
    // n_j = #{g : g^(p^j) = 1} = p^(sum_i min(j, e_i)).
    std::vector<unsigned> log_n{0};
    std::uint64_t pj = 1;
    for (unsigned j = 1; j <= e_total; ++j) {
      pj *= p;
      std::uint64_t n_j = 0;
      for (const auto& [ord, count] : census)
        if (pj % ord == 0) n_j += count;
      unsigned lg = 0;
      std::uint64_t v = n_j;
      while (v % p == 0 && v > 1) {
        v /= p;
        ++lg;
      }
      if (v != 1) throw std::domain_error("order census is not that of an abelian group");
      log_n.push_back(lg);
    }
    // Number of cyclic p-parts with exponent >= j is log_n[j] - log_n[j-1].
    std::vector<unsigned> at_least(e_total + 2, 0);
    for (unsigned j = 1; j <= e_total; ++j) at_least[j] = log_n[j] - log_n[j - 1];
    std::vector<unsigned> es;
    for (unsigned j = 1; j <= e_total; ++j) {
      if (at_least[j] < at_least[j + 1]) throw std::domain_error("order census is not that of an abelian group");
      for (unsigned k = 0; k < at_least[j] - at_least[j + 1]; ++k) es.push_back(j);
    }
    exponents[p] = es;
  }
  GroupStructure g(assemble(std::move(exponents)));
  if (g.order() != total) throw std::domain_error("order census is not that of an abelian group");
  return g;
}

std::uint64_t GroupStructure::order() const {
  return std::accumulate(factors_.begin(), factors_.end(), std::uint64_t{1}, std::multiplies<>());
}

std::string GroupStructure::to_string() const {
  if (factors_.empty()) return "C1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors_.size(); ++i) os << (i ? " x C" : "C") << factors_[i];
  return os.str();
}

GroupStructure unit_group_invariant_factors(std::uint64_t n) {
  if (n < 3) throw std::domain_error("unit_group_invariant_factors: modulus must be at least 3");
  const std::uint64_t phi = euler_phi(n);
  const auto phi_primes = factor_u64(phi);
  std::map<std::uint64_t, std::uint64_t> census;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::uint64_t ord = phi;
    for (const auto& [q, e] : phi_primes) {
      while (ord % q == 0 && powmod(a, ord / q, n) == 1) ord /= q;
    }
    ++census[ord];
  }
  return GroupStructure::from_order_census(census);
}

}  // namespace amt
