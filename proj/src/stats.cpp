#include "lili/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <cstdio>

#include "lili/error.hpp"

namespace lili::stats {

namespace {

std::size_t ones(std::span<const std::uint8_t> bits) {
  return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](auto b) { return b & 1U; }));
}

void require_bits(std::size_t n, std::size_t min) {
  if (n < min)
    throw Error(Errc::TooFewBits, std::to_string(n) + " bits, need at least " + std::to_string(min));
}

}  // namespace

TestReport monobit(std::span<const std::uint8_t> bits, double alpha) {
  require_bits(bits.size(), 100);
  const auto n = static_cast<double>(bits.size());
  const double sum = 2.0 * static_cast<double>(ones(bits)) - n;
  TestReport r{"monobit", bits.size(), std::fabs(sum) / std::sqrt(n), 0, false};
  r.p_value = std::erfc(r.statistic / std::sqrt(2.0));
  r.pass = r.p_value >= alpha;
  return r;
}

TestReport runs_test(std::span<const std::uint8_t> bits, double alpha) {
  require_bits(bits.size(), 100);
  const auto n = static_cast<double>(bits.size());
  const double pi = static_cast<double>(ones(bits)) / n;
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(n))
    throw Error(Errc::PrecheckFailed, "proportion of ones " + std::to_string(pi) + " fails the frequency precheck");
  std::size_t runs = 1;
  for (std::size_t i = 1; i < bits.size(); ++i) runs += (bits[i] & 1U) != (bits[i - 1] & 1U);
  const double v = static_cast<double>(runs);
  const double expected = 2.0 * n * pi * (1.0 - pi);
  TestReport r{"runs", bits.size(), v, 0, false};
  r.p_value = std::erfc(std::fabs(v - expected) / (2.0 * std::sqrt(2.0 * n) * pi * (1.0 - pi)));
  r.pass = r.p_value >= alpha;
  return r;
}

TestReport block_frequency(std::span<const std::uint8_t> bits, std::size_t block_size, double alpha) {
  if (block_size < 1) throw Error(Errc::InvalidArgument, "block size must be >= 1");
  require_bits(bits.size(), 100 * block_size);
  const std::size_t blocks = bits.size() / block_size;
  double chi2 = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    const double pi = static_cast<double>(ones(bits.subspan(b * block_size, block_size))) /
                      static_cast<double>(block_size);
    chi2 += (pi - 0.5) * (pi - 0.5);
  }
  chi2 *= 4.0 * static_cast<double>(block_size);
  TestReport r{"block-frequency", bits.size(), chi2, 0, false};
  r.p_value = boost::math::gamma_q(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
  r.pass = r.p_value >= alpha;
  return r;
}

std::string format_report(const TestReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s %zu %.6g %.6g %s", r.name.c_str(), r.n, r.statistic, r.p_value,
                r.pass ? "PASS" : "FAIL");
  return buf;
}

std::vector<TestReport> battery(std::span<const std::uint8_t> bits, std::size_t block_size, double alpha) {
  std::vector<TestReport> out;
  out.push_back(monobit(bits, alpha));
  try {
    out.push_back(runs_test(bits, alpha));
  } catch (const Error& e) {
    if (e.code() != Errc::PrecheckFailed) throw;
    out.push_back({"runs", bits.size(), 0, 0, false});
  }
  out.push_back(block_frequency(bits, block_size, alpha));
  return out;
}

double ks_uniform_statistic(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const auto m = static_cast<double>(samples.size());
  double d = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double x = samples[i];
    d = std::max({d, static_cast<double>(i + 1) / m - x, x - static_cast<double>(i) / m});
  }
  return d;
}

}  // namespace lili::stats
