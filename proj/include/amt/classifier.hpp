#pragma once

// Membership of (n, a, b) in the seven families of abelian monogenic
// trinomials x^(2n) + a x^n + b. Integer arithmetic only.

#include <cstdint>
#include <optional>
#include <string>

#include "amt/abelian_group.hpp"
#include "amt/integer.hpp"
#include "amt/zfactor.hpp"

namespace amt {

enum class RejectReason { none, n_has_prime_factor_ge5, fails_item_conditions };
const char* to_string(RejectReason r);

struct Classification {
  bool member = false;
  int item = 0;  // 1..7 when member
  GroupStructure group;
  unsigned r = 0, s = 0;
  RejectReason reason = RejectReason::none;
  std::string detail;  // the failed sub-condition, or the matched family
};

/// True iff n has no prime factor >= 5. Throws std::domain_error for n < 1.
bool lemma_n_filter(std::uint64_t n);

struct BaseCaseResult {
  bool abelian_monogenic = false;
  std::optional<GroupStructure> group;
};

/// Small-degree criteria for d in {1, 2, 3, 6}, including irreducibility.
BaseCaseResult base_case_predicate(std::uint64_t d, const BigInt& a, const BigInt& b,
                                   const ZFactorOptions& options = {});

/// Throws std::domain_error when n < 1 or ab = 0.
Classification classify(std::uint64_t n, const BigInt& a, const BigInt& b);

}  // namespace amt
