#pragma once

// Cross-checks the classifier against the factorization, index and Galois
// oracles over ranges of (n, a, b).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "amt/classifier.hpp"
#include "amt/galois.hpp"
#include "amt/monogenicity.hpp"

#include <json.hpp>

namespace amt {

enum class ReportFormat { json_lines, csv };

struct SearchConfig {
  std::vector<std::uint64_t> n_values;
  std::uint64_t coeff_bound = 4;  // scan 0 < |a|, |b| <= coeff_bound
  int oracle_degree_cap = 12;
  int witness_prime_budget = 100;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  ReportFormat format = ReportFormat::json_lines;
  bool timings = false;  // off keeps reports byte-identical across runs

  /// Throws std::domain_error on empty n list, n < 1, zero bound, cap < 2
  /// or zero jobs.
  void validate() const;
};

enum class Agreement { agree, disagree, unconfirmed };
const char* to_string(Agreement a);

struct CaseReport {
  std::uint64_t n = 1;
  BigInt a, b, W;
  bool irreducible = false;
  Classification classifier;
  std::optional<AbelianVerdict> oracle_abelian;        // absent when reducible
  std::optional<MonogenicityResult> oracle_monogenic;  // absent when reducible
  Agreement agreement = Agreement::unconfirmed;
  std::optional<double> ms;
  std::string note;  // why a case is unconfirmed
};

/// Decides (n, a, b) on both sides. The Galois oracle always runs its
/// witness scan; exact splitting is limited by the degree cap.
CaseReport verify_case(std::uint64_t n, const BigInt& a, const BigInt& b, const SearchConfig& config);

struct SearchSummary {
  std::uint64_t agree = 0, disagree = 0, unconfirmed = 0;
  std::uint64_t total() const { return agree + disagree + unconfirmed; }
};

/// Evaluates every triple in (n, a, b) lexicographic order and hands the
/// reports to `sink` in that order, whatever the job count.
SearchSummary run_search(const SearchConfig& config, const std::function<void(const CaseReport&)>& sink);

nlohmann::json to_json(const CaseReport& r);
std::string csv_header();
std::string to_csv(const CaseReport& r);

/// One report line in the configured format, with trailing newline.
void write_report(std::ostream& out, const CaseReport& r, ReportFormat format);

}  // namespace amt
