#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lili::stats {

constexpr double kDefaultAlpha = 0.01;

struct TestReport {
  std::string name;
  std::size_t n = 0;
  double statistic = 0;
  double p_value = 0;
  bool pass = false;  // p_value >= alpha
};

/// |#1 - #0| / sqrt(n), p = erfc(s / sqrt 2). Throws TooFewBits for n < 100.
TestReport monobit(std::span<const std::uint8_t> bits, double alpha = kDefaultAlpha);

/// Total number of runs against its expectation under independence.
/// Throws TooFewBits (n < 100) or PrecheckFailed when |pi - 1/2| >= 2/sqrt(n).
TestReport runs_test(std::span<const std::uint8_t> bits, double alpha = kDefaultAlpha);

/// Chi-square over per-block proportions of ones; p = Q(N/2, chi2/2).
/// Throws TooFewBits for n < 100 * block_size.
TestReport block_frequency(std::span<const std::uint8_t> bits, std::size_t block_size,
                           double alpha = kDefaultAlpha);

/// "<name> <n> <statistic> <p> PASS|FAIL" with 6 significant digits.
std::string format_report(const TestReport& r);

/// Runs all three tests; a failed runs precheck is reported as a FAIL line.
std::vector<TestReport> battery(std::span<const std::uint8_t> bits, std::size_t block_size = 128,
                                double alpha = kDefaultAlpha);

/// Kolmogorov–Smirnov statistic of samples against Uniform(0,1).
double ks_uniform_statistic(std::vector<double> samples);

}  // namespace lili::stats
