#pragma once

// Finite abelian groups in invariant-factor form.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace amt {

/// Invariant factors d_1 | d_2 | ... | d_t, each >= 2. The trivial group
/// has no factors.
class GroupStructure {
 public:
  GroupStructure() = default;
  /// Validates the divisibility chain.
  explicit GroupStructure(std::vector<std::uint64_t> invariant_factors);

  /// Normal form of C_{n_1} x ... x C_{n_k}; orders of 1 are ignored.
  static GroupStructure from_cyclic_orders(const std::vector<std::uint64_t>& orders);

  /// Structure of an abelian group from its element-order census
  /// (order -> number of elements of that order). Throws std::domain_error
  /// if no abelian group has this census.
  static GroupStructure from_order_census(const std::map<std::uint64_t, std::uint64_t>& census);

  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
  std::uint64_t order() const;
  std::uint64_t exponent() const { return factors_.empty() ? 1 : factors_.back(); }
  bool is_cyclic() const { return factors_.size() <= 1; }

  /// e.g. "C2 x C6"; "C1" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;

 private:
  std::vector<std::uint64_t> factors_;
};

/// Multiplicative group of units modulo n (n >= 3), by enumeration.
GroupStructure unit_group_invariant_factors(std::uint64_t n);

}  // namespace amt
