#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "lili/error.hpp"
#include "lili/generator.hpp"
#include "lili/stats.hpp"

using namespace lili;
using namespace lili::stats;

namespace {

// First 100 bits of the binary expansion of pi.
const std::string kPiBits =
    "1100100100001111110110101010001000100001011010001100001000110100110001001100011001100010100010111000";

std::vector<std::uint8_t> from_text(const std::string& s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

}  // namespace

TEST_SUITE("stats") {
  TEST_CASE("monobit") {
    const auto z = monobit(std::vector<std::uint8_t>(100, 0));
    CHECK(z.statistic == doctest::Approx(10.0));
    CHECK(z.p_value < 1e-20);
    CHECK_FALSE(z.pass);

    std::vector<std::uint8_t> balanced(1024);
    for (std::size_t i = 0; i < balanced.size(); ++i) balanced[i] = i % 2;
    const auto b = monobit(balanced);
    CHECK(b.statistic == 0.0);
    CHECK(b.p_value == 1.0);
    CHECK(b.pass);

    const auto pi = monobit(from_text(kPiBits));
    CHECK(pi.p_value == doctest::Approx(0.109598583399116).epsilon(1e-10));
    CHECK(pi.pass);

    std::string ten;
    for (int i = 0; i < 10; ++i) ten += kPiBits;
    CHECK(monobit(from_text(ten)).p_value == doctest::Approx(4.200393976022014e-07).epsilon(1e-8));

    CHECK_THROWS_AS(monobit(std::vector<std::uint8_t>(99, 1)), Error);
  }

  TEST_CASE("runs") {
    CHECK(runs_test(from_text(kPiBits)).p_value == doctest::Approx(0.5007979178870903).epsilon(1e-10));

    std::vector<std::uint8_t> alternating(1000);
    for (std::size_t i = 0; i < alternating.size(); ++i) alternating[i] = i % 2;
    const auto a = runs_test(alternating);
    CHECK(a.statistic == 1000.0);
    CHECK_FALSE(a.pass);

    std::vector<std::uint8_t> halves(1000, 0);
    std::fill(halves.begin() + 500, halves.end(), 1);
    const auto h = runs_test(halves);
    CHECK(h.statistic == 2.0);
    CHECK_FALSE(h.pass);

    try {
      runs_test(std::vector<std::uint8_t>(200, 1));
      FAIL("expected PrecheckFailed");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PrecheckFailed);
    }
  }

  TEST_CASE("block frequency") {
    std::string ten;
    for (int i = 0; i < 10; ++i) ten += kPiBits;
    const auto r = block_frequency(from_text(ten), 10);
    CHECK(r.statistic == doctest::Approx(72.0));
    CHECK(r.p_value == doctest::Approx(0.9843796799920487).epsilon(1e-10));

    const auto zero = block_frequency(std::vector<std::uint8_t>(12800, 0), 128);
    CHECK_FALSE(zero.pass);

    std::vector<std::uint8_t> ideal(12800);
    for (std::size_t i = 0; i < ideal.size(); ++i) ideal[i] = i % 2;
    const auto id = block_frequency(ideal, 128);
    CHECK(id.statistic == 0.0);
    CHECK(id.p_value == 1.0);

    CHECK_THROWS_AS(block_frequency(std::vector<std::uint8_t>(12799, 0), 128), Error);
  }

  TEST_CASE("report format and battery") {
    TestReport r{"monobit", 65536, 0.123456789, 0.90211, true};
    CHECK(format_report(r) == "monobit 65536 0.123457 0.90211 PASS");
    r.pass = false;
    CHECK(format_report(r).substr(format_report(r).size() - 4) == "FAIL");

    const auto all_ones = battery(std::vector<std::uint8_t>(65536, 1));
    REQUIRE(all_ones.size() == 3);
    for (const auto& t : all_ones) CHECK_FALSE(t.pass);
  }

  TEST_CASE("keystream statistics match the reference values") {
    struct Expected {
      const char* key;
      double monobit_s, monobit_p, runs, runs_p, chi2, block_p;
    };
    // Independently computed; the yyyy... monobit p-value falls below 0.01.
    const Expected table[] = {
        {"yyyyyyyyyyyyyyyy", 2.640625, 0.008275325921954001, 32461, 0.017718351523649575, 501.0, 0.6275495650166494},
        {"gggggggggggggggg", 0.0859375, 0.9315161010752993, 32555, 0.09610566722965533, 495.21875, 0.6947510219488017},
        {"123456789abcdefg", 1.375, 0.16913144470267144, 32836, 0.5901278327329978, 539.3125, 0.1950217654547945},
    };
    for (const auto& e : table) {
      INFO(e.key);
      const auto ks = cipher::keystream(cipher::KeyMaterial::from_ascii(e.key), 1U << 16);
      const auto r = battery(ks);
      REQUIRE(r.size() == 3);
      CHECK(r[0].statistic == doctest::Approx(e.monobit_s).epsilon(1e-12));
      CHECK(r[0].p_value == doctest::Approx(e.monobit_p).epsilon(1e-9));
      CHECK(r[1].statistic == e.runs);
      CHECK(r[1].p_value == doctest::Approx(e.runs_p).epsilon(1e-9));
      CHECK(r[2].statistic == doctest::Approx(e.chi2).epsilon(1e-12));
      CHECK(r[2].p_value == doctest::Approx(e.block_p).epsilon(1e-9));
      for (const auto& t : r) CHECK(t.pass == (t.p_value >= kDefaultAlpha));
    }
  }

  TEST_CASE("p-values of random sequences are roughly uniform") {
    std::mt19937_64 rng(31337);
    std::vector<double> mono, runs, block;
    for (int i = 0; i < 1000; ++i) {
      std::vector<std::uint8_t> bits(10000);
      for (auto& b : bits) b = rng() & 1U;
      mono.push_back(monobit(bits).p_value);
      runs.push_back(runs_test(bits).p_value);
      block.push_back(block_frequency(bits, 100).p_value);
    }
    // KS critical value at alpha = 0.001.
    const double critical = 1.95 / std::sqrt(1000.0);
    CHECK(ks_uniform_statistic(mono) < critical);
    CHECK(ks_uniform_statistic(runs) < critical);
    CHECK(ks_uniform_statistic(block) < critical);
  }

  TEST_CASE("KS statistic") {
    CHECK(ks_uniform_statistic({0.5}) == doctest::Approx(0.5));
    std::vector<double> grid;
    for (int i = 0; i < 100; ++i) grid.push_back((i + 0.5) / 100);
    CHECK(ks_uniform_statistic(grid) == doctest::Approx(0.005));
  }
}
