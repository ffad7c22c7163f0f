#include "lili/reconstruct.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <random>

#include "lili/error.hpp"

namespace lili::recon {

Accumulator::Accumulator() : table_(kFilterInputs), conflicted_(kInputSpace, 0) {}

void Accumulator::add(const Observation& obs) {
  if (obs.word >= kInputSpace) throw Error(Errc::WidthMismatch, "observation word exceeds 10 bits");
  ++report_.observations;
  const std::size_t w = obs.word;
  if (!table_.defined(w)) {
    table_.set(w, obs.bit != 0);
    if (++report_.distinct_inputs_seen == kInputSpace) report_.first_full_coverage_index = report_.observations;
  } else if (table_.output(w) != (obs.bit != 0) && !conflicted_[w]) {
    conflicted_[w] = 1;
    report_.conflicts.push_back(obs.word);
  }
}

Accumulation accumulate(const ObservationSet& obs) {
  Accumulator acc;
  for (const auto& p : obs.pairs) acc.add(p);
  return {acc.table(), acc.report()};
}

boolfn::AnfPolynomial interpolate(const boolfn::TruthTable& table) {
  if (!table.complete()) {
    const auto missing = table.missing();
    throw Error(Errc::Underdetermined,
                std::to_string(missing.size()) + " inputs unobserved (coverage " +
                    std::to_string(table.size() - missing.size()) + "/" + std::to_string(table.size()) + ")",
                missing);
  }
  return boolfn::truth_table_to_anf(table);
}

boolfn::AnfPolynomial interpolate(const Accumulation& acc) {
  if (!acc.report.conflicts.empty()) {
    std::vector<std::size_t> words(acc.report.conflicts.begin(), acc.report.conflicts.end());
    throw Error(Errc::Conflicted, std::to_string(words.size()) + " inputs observed with both outputs", words);
  }
  return interpolate(acc.table);
}

AttackResult end_to_end_attack(const cipher::KeyMaterial& key, std::size_t budget,
                               const cipher::GeneratorConfig& config) {
  const auto acc = accumulate(cipher::replay(key, budget, config));
  return {interpolate(acc), acc.report};
}

std::string format_report(const AttackResult& result) {
  const auto& c = result.coverage;
  std::string s;
  s += "observations: " + std::to_string(c.observations) + "\n";
  s += "coverage: " + std::to_string(c.distinct_inputs_seen) + "/" + std::to_string(kInputSpace) + "\n";
  s += "first-full-coverage-index: " +
       (c.first_full_coverage_index ? std::to_string(*c.first_full_coverage_index) : std::string("none")) + "\n";
  s += "conflicts: " + std::to_string(c.conflicts.size()) + "\n";
  s += "terms: " + std::to_string(result.recovered.term_count()) + "\n";
  s += "degree: " + std::to_string(result.recovered.degree()) + "\n";
  s += "anf: " + boolfn::print_anf(result.recovered) + "\n";
  return s;
}

// ---------------------------------------------------------------------------

cipher::KeyMaterial trial_key(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 rng(seq);
  const auto c_len = lfsr::clock_register_spec().length;
  while (true) {
    cipher::KeyMaterial key;
    for (int half = 0; half < 2; ++half) {
      const std::uint64_t v = rng();
      for (int b = 0; b < 8; ++b) key.bytes[static_cast<std::size_t>(half * 8 + b)] =
          static_cast<std::uint8_t>(v >> (56 - 8 * b));
    }
    bool c_nonzero = false;
    bool d_nonzero = false;
    for (int k = 1; k <= cipher::kKeyBits; ++k) (k <= c_len ? c_nonzero : d_nonzero) |= key.bit(k);
    if (c_nonzero && d_nonzero) {
      key.source = "hex:" + key.hex();
      return key;
    }
  }
}

TrialResult run_trial(std::uint64_t seed, std::uint64_t trial, const ExperimentOptions& options) {
  TrialResult r;
  r.trial = trial;
  r.key = trial_key(seed, trial);
  cipher::Generator g(options.config, r.key);
  Accumulator acc;
  for (std::size_t i = 0; i < options.budget && !acc.full(); ++i) acc.add(g.next_observation());
  r.first_full_coverage_index = acc.report().first_full_coverage_index;
  r.coverage = acc.report().distinct_inputs_seen;
  return r;
}

MinBitsSummary summarize(std::vector<TrialResult> trials, std::size_t budget) {
  std::sort(trials.begin(), trials.end(), [](const auto& a, const auto& b) { return a.trial < b.trial; });
  MinBitsSummary s;
  std::vector<std::size_t> idx;
  std::size_t in_target = 0;
  std::size_t in_budget = 0;
  for (const auto& t : trials) {
    if (!t.first_full_coverage_index) {
      ++s.budget_exceeded;
      continue;
    }
    const std::size_t v = *t.first_full_coverage_index;
    idx.push_back(v);
    in_target += v >= kTargetRangeLow && v <= kTargetRangeHigh;
    in_budget += v >= kTargetRangeLow && v <= budget;
  }
  s.successes = idx.size();
  if (!trials.empty()) {
    s.fraction_in_target_range = static_cast<double>(in_target) / static_cast<double>(trials.size());
    s.fraction_in_budget = static_cast<double>(in_budget) / static_cast<double>(trials.size());
  }
  if (!idx.empty()) {
    std::sort(idx.begin(), idx.end());
    s.min = idx.front();
    s.max = idx.back();
    const std::size_t m = idx.size();
    s.median = m % 2 ? static_cast<double>(idx[m / 2])
                     : (static_cast<double>(idx[m / 2 - 1]) + static_cast<double>(idx[m / 2])) / 2.0;
    double sum = 0;
    for (auto v : idx) sum += static_cast<double>(v);
    s.mean = sum / static_cast<double>(m);
  }
  s.trials = std::move(trials);
  return s;
}

MinBitsSummary min_bits_experiment_serial(std::size_t trials, std::uint64_t seed, const ExperimentOptions& options) {
  if (trials < 1) throw Error(Errc::InvalidArgument, "trials must be >= 1");
  options.config.validate();
  std::vector<TrialResult> results;
  results.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) results.push_back(run_trial(seed, t, options));
  return summarize(std::move(results), options.budget);
}

MinBitsSummary min_bits_experiment(std::size_t trials, std::uint64_t seed, const ExperimentOptions& options) {
  if (trials < 1) throw Error(Errc::InvalidArgument, "trials must be >= 1");
  options.config.validate();
  std::vector<TrialResult> results(trials);
  const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t)
    results[static_cast<std::size_t>(t)] = run_trial(seed, static_cast<std::uint64_t>(t), options);
  return summarize(std::move(results), options.budget);
}

std::string format_summary(const MinBitsSummary& s) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "trials: %zu\nfull-coverage: %zu\nbudget-exceeded: %zu\nmin: %zu\nmedian: %.1f\nmean: %.2f\n"
                "max: %zu\nfraction-in-[4096,8192]: %.4f\nfraction-in-[4096,budget]: %.4f\n"
                "coupon-collector-reference: %.2f\n",
                s.trials.size(), s.successes, s.budget_exceeded, s.min, s.median, s.mean, s.max,
                s.fraction_in_target_range, s.fraction_in_budget, coupon_collector_expectation(kInputSpace));
  out += buf;
  for (const auto& t : s.trials) {
    std::snprintf(buf, sizeof buf, "trial %llu key=%s first-full-coverage=%s coverage=%zu\n",
                  static_cast<unsigned long long>(t.trial), t.key.hex().c_str(),
                  t.first_full_coverage_index ? std::to_string(*t.first_full_coverage_index).c_str()
                                              : "TrialBudgetExceeded",
                  t.coverage);
    out += buf;
  }
  return out;
}

double coupon_collector_expectation(std::size_t m) {
  double h = 0;
  for (std::size_t k = 1; k <= m; ++k) h += 1.0 / static_cast<double>(k);
  return static_cast<double>(m) * h;
}

}  // namespace lili::recon
