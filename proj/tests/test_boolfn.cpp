#include <doctest.h>

#include <numeric>
#include <random>

#include "lili/boolfn.hpp"
#include "lili/error.hpp"
#include "lili/generator.hpp"
#include "oracles.hpp"

using namespace lili;
using namespace lili::boolfn;

namespace {

AnfPolynomial filter() { return cipher::default_filter(); }

// Term list of the 46-term filter, transcribed as index lists.
const std::vector<std::vector<int>> kFilterTerms = {
    {5}, {4}, {3}, {2}, {10, 6}, {10, 4}, {9, 3}, {9, 1}, {8, 2}, {8, 1}, {7, 6},
    {10, 9, 5}, {10, 9, 4}, {10, 9, 3}, {10, 9, 2}, {10, 8, 4}, {10, 8, 3}, {10, 7, 6}, {10, 7, 5},
    {10, 7, 4}, {9, 8, 6}, {9, 8, 3}, {9, 7, 6}, {9, 7, 4}, {9, 7, 3},
    {10, 9, 8, 6}, {10, 9, 8, 4}, {10, 9, 8, 3}, {10, 9, 8, 1}, {10, 9, 7, 6}, {10, 9, 7, 4},
    {10, 9, 7, 2}, {10, 8, 7, 5}, {10, 8, 7, 3}, {9, 8, 7, 4}, {9, 8, 7, 2}, {9, 7, 6, 5}, {9, 7, 6, 4},
    {10, 9, 8, 7, 4}, {10, 9, 8, 7, 3}, {10, 9, 7, 6, 5}, {10, 9, 7, 6, 4}, {9, 8, 7, 6, 5}, {9, 8, 7, 6, 4},
    {10, 9, 8, 7, 6, 5}, {10, 9, 8, 7, 6, 4}};

AnfPolynomial random_anf(std::mt19937_64& rng, int n) {
  AnfPolynomial f(n);
  for (std::size_t m = 0; m < (std::size_t{1} << n); ++m)
    if (rng() & 1U) f.toggle(static_cast<VarMask>(m));
  return f;
}

template <class F>
void check_errc(F&& f, Errc expected) {
  try {
    f();
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == expected);
  }
}

}  // namespace

TEST_SUITE("boolfn") {
  TEST_CASE("the 46-term filter parses with the published shape") {
    const auto f = filter();
    CHECK(f.variables() == 10);
    CHECK(f.term_count() == 46);
    CHECK(f.degree() == 6);
    CHECK(f.degree_profile() == std::vector<std::size_t>{0, 4, 7, 14, 13, 6, 2});
    CHECK_FALSE(f.monomials().count(0));

    AnfPolynomial transcribed(10);
    for (const auto& t : kFilterTerms) {
      VarMask m = 0;
      for (int i : t) m |= var_bit(i);
      transcribed.toggle(m);
    }
    CHECK(transcribed == f);
  }

  TEST_CASE("parse edge cases") {
    CHECK(parse_anf("0", 4).is_zero());
    CHECK(parse_anf("x1*x1 + x2 + x2", 3) == parse_anf("x1", 3));
    CHECK(parse_anf(" X3 *x1+1 ", 3) == parse_anf("1+x1*x3", 3));
    CHECK(parse_anf("x1*0 + x2", 2) == parse_anf("x2", 2));
    check_errc([] { parse_anf("x1 + ", 3); }, Errc::SyntaxError);
    check_errc([] { parse_anf("x1 x2", 3); }, Errc::SyntaxError);
    check_errc([] { parse_anf("y1", 3); }, Errc::SyntaxError);
    check_errc([] { parse_anf("x4", 3); }, Errc::VariableOutOfRange);
    check_errc([] { parse_anf("x0", 3); }, Errc::VariableOutOfRange);
    try {
      parse_anf("x1 + x2 ^ x3", 3);
      FAIL("expected SyntaxError");
    } catch (const Error& e) {
      REQUIRE(e.detail().size() == 1);
      CHECK(e.detail()[0] == 8);
    }
  }

  TEST_CASE("canonical printing") {
    CHECK(print_anf(AnfPolynomial(3)) == "0");
    CHECK(print_anf(parse_anf("1", 3)) == "1");
    CHECK(print_anf(parse_anf("x1*x3 + x2 + 1 + x3 + x2*x3", 3)) == "1+x3+x2+x3*x2+x3*x1");
    // The published listing is already in canonical order.
    CHECK(print_anf(filter()) == cipher::filter_text());
    CHECK(print_anf(cipher::default_expanded_filter()) == cipher::expanded_filter_text());
    CHECK(parse_anf(print_anf(filter()), 10) == filter());
  }

  TEST_CASE("print/parse round trip on random functions") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
      const auto f = random_anf(rng, 6);
      CHECK(parse_anf(print_anf(f), 6) == f);
    }
  }

  TEST_CASE("document format") {
    const auto doc = format_anf_document(filter());
    CHECK(doc.rfind("# n=10\n", 0) == 0);
    CHECK(parse_anf_document(doc) == filter());
    CHECK(parse_anf_document("# n=89\nx81*x66\n").variables() == 89);
    CHECK(parse_anf_document("x3*x1").variables() == 10);
    CHECK(parse_anf_document("x3", 5).variables() == 5);
  }

  TEST_CASE("evaluate") {
    const auto f = filter();
    CHECK_FALSE(f.evaluate(VarMask{0}));
    CHECK(f.evaluate(var_bit(5)));
    CHECK_FALSE(f.evaluate(VarMask{1023}));
    std::vector<std::uint8_t> a(10, 0);
    a[4] = 1;
    CHECK(f.evaluate(a));
    check_errc([&] { f.evaluate(VarMask{1024}); }, Errc::WidthMismatch);
    check_errc([&] { f.evaluate(std::vector<std::uint8_t>(9, 0)); }, Errc::WidthMismatch);
  }

  TEST_CASE("truth table of the filter agrees with direct evaluation") {
    const auto t = anf_to_truth_table(filter());
    REQUIRE(t.size() == 1024);
    CHECK(t.complete());
    for (std::uint64_t i = 0; i < 1024; ++i) {
      CHECK(t.output(i) == oracle::eval_terms(kFilterTerms, i));
      CHECK(t.output(i) == filter().evaluate(static_cast<VarMask>(i)));
    }
    CHECK(t.weight() == 512);
  }

  TEST_CASE("small truth tables") {
    CHECK(anf_to_truth_table(AnfPolynomial(3)).weight() == 0);
    const auto t = anf_to_truth_table(parse_anf("x1", 2));
    CHECK(std::vector<std::uint8_t>(t.outputs().begin(), t.outputs().end()) ==
          std::vector<std::uint8_t>{0, 1, 0, 1});

    TruthTable top(2);
    for (std::size_t i = 0; i < 4; ++i) top.set(i, i == 3);
    CHECK(truth_table_to_anf(top) == parse_anf("x1*x2", 2));
    TruthTable nor(2);
    for (std::size_t i = 0; i < 4; ++i) nor.set(i, i == 0);
    CHECK(truth_table_to_anf(nor) == parse_anf("1+x1+x2+x1*x2", 2));

    TruthTable zeros(4);
    zeros.mark_all_defined();
    CHECK(truth_table_to_anf(zeros).is_zero());

    TruthTable partial(3);
    partial.set(0, true);
    try {
      truth_table_to_anf(partial);
      FAIL("expected IncompleteTable");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::IncompleteTable);
      CHECK(e.detail() == std::vector<std::size_t>{7});
    }
    check_errc([] { TruthTable(25); }, Errc::TooManyVariables);
  }

  TEST_CASE("Möbius round trip on 1000 random 10-variable functions") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
      const auto f = random_anf(rng, 10);
      CHECK(truth_table_to_anf(anf_to_truth_table(f)) == f);
      TruthTable t(10);
      for (std::size_t j = 0; j < 1024; ++j) t.set(j, rng() & 1U);
      CHECK(anf_to_truth_table(truth_table_to_anf(t)) == t);
    }
  }

  TEST_CASE("relabel") {
    const auto mapped = relabel(filter(), cipher::kDataPositions, 89);
    CHECK(mapped == cipher::default_expanded_filter());
    CHECK(mapped.term_count() == 46);
    CHECK(mapped.degree_profile() == filter().degree_profile());

    const std::vector<int> id{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    CHECK(relabel(filter(), id, 10) == filter());
    CHECK(relabel(parse_anf("x1*x2", 2), std::vector<int>{3, 7}, 7) == parse_anf("x3*x7", 7));

    check_errc([] { relabel(parse_anf("x1", 2), std::vector<int>{3, 3}, 5); }, Errc::NonInjectiveMap);
    check_errc([] { relabel(parse_anf("x1", 2), std::vector<int>{3, 6}, 5); }, Errc::TargetOutOfRange);
    check_errc([] { relabel(parse_anf("x1", 2), std::vector<int>{1}, 5); }, Errc::WidthMismatch);
  }

  TEST_CASE("relabel is functorial") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const auto f = random_anf(rng, 5);
      std::vector<int> pool(12);
      std::iota(pool.begin(), pool.end(), 1);
      std::shuffle(pool.begin(), pool.end(), rng);
      const std::vector<int> a(pool.begin(), pool.begin() + 5);  // 5 -> 12
      std::vector<int> b(12);
      std::iota(b.begin(), b.end(), 1);
      std::shuffle(b.begin(), b.end(), rng);
      for (auto& v : b) v += 8;  // 12 -> 20
      std::vector<int> ba;
      for (int v : a) ba.push_back(b[static_cast<std::size_t>(v - 1)]);
      CHECK(relabel(relabel(f, a, 12), b, 20) == relabel(f, ba, 20));
    }
  }

  TEST_CASE("Walsh spectrum and metrics") {
    const auto t = anf_to_truth_table(filter());
    const auto w = walsh_spectrum(t);
    std::int64_t sum_sq = 0;
    std::int64_t peak = 0;
    for (auto v : w) {
      sum_sq += v * v;
      peak = std::max(peak, v < 0 ? -v : v);
    }
    CHECK(sum_sq == (std::int64_t{1} << 20));
    // Direct O(4^n) correlation at a few masks.
    for (std::size_t a : {0UL, 1UL, 17UL, 512UL, 1023UL}) {
      std::int64_t direct = 0;
      for (std::size_t x = 0; x < 1024; ++x)
        direct += ((t.output(x) ^ (__builtin_popcountll(a & x) & 1)) ? -1 : 1);
      CHECK(w[a] == direct);
    }
    CHECK(peak == 64);

    const auto m = metrics(filter());
    CHECK(m.degree == 6);
    CHECK(m.term_count == 46);
    CHECK(m.weight == 512);
    CHECK(m.balanced);
    CHECK(m.nonlinearity == 480);

    const auto z = metrics(AnfPolynomial(4));
    CHECK(z.is_zero);
    CHECK(z.degree == 0);
    CHECK(z.weight == 0);
    CHECK_FALSE(z.balanced);
    CHECK(z.nonlinearity == 0);

    CHECK(metrics(parse_anf("x1*x2+x3*x4", 4)).nonlinearity == 6);  // bent
    check_errc([] { metrics(AnfPolynomial(25)); }, Errc::TooManyVariables);
  }

  TEST_CASE("Parseval on random spectra") {
    std::mt19937_64 rng(9);
    for (int n = 1; n <= 12; ++n) {
      TruthTable t(n);
      for (std::size_t j = 0; j < t.size(); ++j) t.set(j, rng() & 1U);
      std::int64_t s = 0;
      for (auto v : walsh_spectrum(t)) s += v * v;
      CHECK(s == (std::int64_t{1} << (2 * n)));
    }
  }
}
