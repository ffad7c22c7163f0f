#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lili/boolfn.hpp"
#include "lili/generator.hpp"
#include "lili/observations.hpp"

namespace lili::recon {

struct CoverageReport {
  std::size_t observations = 0;
  std::size_t distinct_inputs_seen = 0;
  std::optional<std::size_t> first_full_coverage_index;  // 1-based observation count
  std::vector<std::uint16_t> conflicts;                  // words seen with both outputs
};

/// Incremental tabulation of (input, output) pairs into a partial table.
class Accumulator {
 public:
  Accumulator();

  void add(const Observation& obs);

  const boolfn::TruthTable& table() const noexcept { return table_; }
  const CoverageReport& report() const noexcept { return report_; }
  bool full() const noexcept { return report_.distinct_inputs_seen == kInputSpace; }

 private:
  boolfn::TruthTable table_;
  CoverageReport report_;
  std::vector<std::uint8_t> conflicted_;
};

struct Accumulation {
  boolfn::TruthTable table;
  CoverageReport report;
};

Accumulation accumulate(const ObservationSet& obs);

/// Exact ANF of a fully covered, conflict-free table. Throws Conflicted
/// (detail = conflicting words) or Underdetermined (detail = missing words).
boolfn::AnfPolynomial interpolate(const Accumulation& acc);
boolfn::AnfPolynomial interpolate(const boolfn::TruthTable& table);

struct AttackResult {
  boolfn::AnfPolynomial recovered;
  CoverageReport coverage;
};

/// Known-initial-state attack: replay `budget` bits, tabulate, interpolate.
/// Throws Underdetermined (message carries the coverage count).
AttackResult end_to_end_attack(const cipher::KeyMaterial& key, std::size_t budget,
                               const cipher::GeneratorConfig& config = {});

/// Structured text report for a successful attack.
std::string format_report(const AttackResult& result);

// ---------------------------------------------------------------------------
// Data-complexity experiment

constexpr std::size_t kDefaultTrialBudget = std::size_t{1} << 16;
constexpr std::size_t kTargetRangeLow = std::size_t{1} << 12;
constexpr std::size_t kTargetRangeHigh = std::size_t{1} << 13;

struct TrialResult {
  std::uint64_t trial = 0;
  cipher::KeyMaterial key;
  std::optional<std::size_t> first_full_coverage_index;  // absent: TrialBudgetExceeded
  std::size_t coverage = 0;
};

struct MinBitsSummary {
  std::vector<TrialResult> trials;  // ordered by trial index
  std::size_t successes = 0;
  std::size_t budget_exceeded = 0;
  std::size_t min = 0;
  std::size_t max = 0;
  double median = 0;
  double mean = 0;
  double fraction_in_target_range = 0;  // [2^12, 2^13], over all trials
  double fraction_in_budget = 0;       // [2^12, budget], over all trials
};

struct ExperimentOptions {
  std::size_t budget = kDefaultTrialBudget;
  cipher::GeneratorConfig config{};
};

/// Key for trial `trial` under `seed`: mt19937_64 seeded with
/// seed_seq{seed, trial}; keys that load an all-zero register are redrawn.
cipher::KeyMaterial trial_key(std::uint64_t seed, std::uint64_t trial);

TrialResult run_trial(std::uint64_t seed, std::uint64_t trial, const ExperimentOptions& options);

/// Serial reference loop.
MinBitsSummary min_bits_experiment_serial(std::size_t trials, std::uint64_t seed,
                                          const ExperimentOptions& options = {});
/// OpenMP over trials; identical output to the serial loop.
MinBitsSummary min_bits_experiment(std::size_t trials, std::uint64_t seed,
                                   const ExperimentOptions& options = {});

MinBitsSummary summarize(std::vector<TrialResult> trials, std::size_t budget);
std::string format_summary(const MinBitsSummary& s);

/// Coupon-collector expectation m * H_m for m equally likely inputs.
double coupon_collector_expectation(std::size_t m);

}  // namespace lili::recon
