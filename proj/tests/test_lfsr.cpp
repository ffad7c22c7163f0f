#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "lili/error.hpp"
#include "lili/generator.hpp"
#include "lili/gf2poly.hpp"
#include "lili/lfsr.hpp"

using namespace lili;
using namespace lili::lfsr;

namespace {

const auto kGc = gf2::FeedbackPolynomial::from_exponents({39, 35, 33, 31, 17, 15, 14, 2, 0});
const auto kGd = gf2::FeedbackPolynomial::from_exponents({89, 83, 80, 55, 53, 42, 39, 1, 0});

std::vector<std::uint8_t> key_bits(const std::string& key, int from, int count) {
  const auto k = cipher::KeyMaterial::from_ascii(key);
  std::vector<std::uint8_t> out;
  for (int i = from; i < from + count; ++i) out.push_back(k.bit(i));
  return out;
}

std::string bit_string(const LfsrState& s) {
  std::string out;
  for (auto b : s.stages()) out += b ? '1' : '0';
  return out;
}

LfsrState random_state(const LfsrSpec& spec, std::mt19937_64& rng) {
  LfsrState s(spec);
  for (int i = 1; i <= spec.length; ++i) s.set_stage(i, rng() & 1U);
  if (s.all_zero()) s.set_stage(1, true);
  return s;
}

}  // namespace

TEST_SUITE("lfsr") {
  TEST_CASE("presets") {
    const auto c = clock_register_spec();
    const auto d = data_register_spec();
    CHECK(c.length == 39);
    CHECK(c.feedback_taps == std::vector<int>{38, 26, 25, 23, 9, 7, 5, 1});
    CHECK(d.length == 89);
    CHECK(d.feedback_taps == std::vector<int>{89, 51, 48, 37, 35, 10, 7, 1});
    CHECK(c.feedback_polynomial() == kGc);
    CHECK(d.feedback_polynomial() == kGd);
    CHECK_THROWS_AS(LfsrSpec::make(4, {4, 2}, "no tap 1"), Error);
    CHECK_THROWS_AS(LfsrSpec::make(4, {5, 1}, "out of range"), Error);
    CHECK_THROWS_AS(LfsrSpec::make(4, {3, 3, 1}, "repeat"), Error);
    CHECK(LfsrSpec::from_feedback_polynomial(kGc, "c").feedback_taps == c.feedback_taps);
  }

  TEST_CASE("all-zero state is a detected fixed point") {
    LfsrState s(clock_register_spec());
    CHECK_FALSE(s.degenerate());
    const auto next = step(s);
    CHECK(next.all_zero());
    CHECK(next.degenerate());
  }

  TEST_CASE("4-stage register has period 15") {
    const auto spec = LfsrSpec::make(4, {4, 1}, "toy");
    const std::vector<std::uint8_t> seed_bits{1, 0, 0, 0};
    const LfsrState seed(spec, seed_bits);
    LfsrState s = seed;
    std::set<std::string> seen;
    for (int i = 1; i <= 15; ++i) {
      seen.insert(bit_string(s));
      s.step();
      if (i < 15) CHECK_FALSE(s == seed);
    }
    CHECK(s == seed);
    CHECK(seen.size() == 15);
  }

  TEST_CASE("one step of LFSR_c from the yyyy... key") {
    const LfsrState s(clock_register_spec(), key_bits("yyyyyyyyyyyyyyyy", 1, 39));
    CHECK(bit_string(s) == "011110010111100101111001011110010111100");
    // Taps 38,26,25,23,9,7,5,1 read 0,1,1,1,1,0,1,0 -> feedback 0.
    CHECK(bit_string(step(s)) == "111100101111001011110010111100101111000");
  }

  TEST_CASE("step_n composes") {
    std::mt19937_64 rng(8);
    const auto s = random_state(data_register_spec(), rng);
    CHECK(step_n(s, 1) == step(s));
    CHECK(step_n(s, 4) == step(step(step(step(s)))));
    CHECK_THROWS_AS(step_n(s, 0), Error);
  }

  TEST_CASE("extract") {
    LfsrState ones(data_register_spec());
    for (int i = 1; i <= 89; ++i) ones.set_stage(i, true);
    CHECK(extract(ones, cipher::kDataPositions) == 1023);
    CHECK(extract(LfsrState(data_register_spec()), cipher::kDataPositions) == 0);

    const LfsrState loaded(data_register_spec(), key_bits("yyyyyyyyyyyyyyyy", 40, 89));
    CHECK(extract(loaded, cipher::kDataPositions) == 693);

    const std::vector<int> bad{1, 90};
    CHECK_THROWS_AS(extract(loaded, bad), Error);
  }

  TEST_CASE("state dump format") {
    const LfsrState s(clock_register_spec(), key_bits("yyyyyyyyyyyyyyyy", 1, 39));
    CHECK(s.dump() == "LFSR_c 39 011110010111100101111001011110010111100");
  }

  TEST_CASE("consistency with the feedback polynomials") {
    CHECK(consistency_check(clock_register_spec(), kGc));
    CHECK(consistency_check(data_register_spec(), kGd));
    CHECK_FALSE(consistency_check(clock_register_spec(), kGd));
    CHECK_FALSE(consistency_check(data_register_spec(), kGd.reciprocal()));

    std::mt19937_64 rng(21);
    for (const auto& [spec, poly] : {std::pair{clock_register_spec(), kGc}, std::pair{data_register_spec(), kGd}}) {
      const auto bits = emit(random_state(spec, rng), 4096);
      CHECK(satisfies_recurrence(poly, bits));
      const auto bm = gf2::berlekamp_massey(std::span(bits).first(2 * static_cast<std::size_t>(spec.length)));
      CHECK(bm.linear_complexity() == spec.length);
      CHECK(bm.connection == poly);
    }
  }

  TEST_CASE("degree-20 surrogate has full period") {
    const auto poly = gf2::FeedbackPolynomial::from_exponents({20, 3, 0});
    REQUIRE(gf2::is_primitive(poly, gf2::factorize(gf2::mersenne(20))));
    const auto spec = LfsrSpec::from_feedback_polynomial(poly, "surrogate");
    CHECK(consistency_check(spec, poly));
    LfsrState s(spec);
    s.set_stage(7, true);
    const auto seed = s;
    std::uint64_t period = 0;
    do {
      s.step_n(1);
      ++period;
    } while (!(s == seed) && period < (1U << 21));
    CHECK(period == (1U << 20) - 1);
  }

  TEST_CASE("step is a bijection on nonzero states of primitive degree <= 16 specs") {
    for (const auto& exps : {std::vector<int>{5, 2, 0}, std::vector<int>{11, 2, 0}, std::vector<int>{16, 5, 3, 2, 0}}) {
      const auto poly = gf2::FeedbackPolynomial::from_exponents(exps);
      const int n = poly.degree();
      REQUIRE(gf2::is_primitive(poly, gf2::factorize(gf2::mersenne(static_cast<unsigned>(n)))));
      LfsrState s(LfsrSpec::from_feedback_polynomial(poly, "probe"));
      s.set_stage(1, true);
      std::vector<std::uint8_t> visited(std::size_t{1} << n, 0);
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << n) - 1; ++i) {
        const auto w = static_cast<std::size_t>(s.words()[0]);
        CHECK_FALSE(visited[w]);
        visited[w] = 1;
        s.step();
      }
      CHECK(std::count(visited.begin(), visited.end(), 1) == (1 << n) - 1);
      CHECK_FALSE(visited[0]);
    }
  }
}
