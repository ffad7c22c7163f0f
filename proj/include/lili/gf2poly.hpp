#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lili::gf2 {

__extension__ typedef unsigned __int128 u128;

/// Binary polynomial over GF(2), stored as a dense little-endian bit vector
/// (bit i of the packed words is the coefficient of x^i). The zero polynomial
/// has degree -1 and is only produced by arithmetic, never by construction
/// from an exponent set.
class FeedbackPolynomial {
 public:
  FeedbackPolynomial() = default;

  /// Throws EmptyExponentSet, DuplicateExponent or NegativeExponent.
  static FeedbackPolynomial from_exponents(std::span<const int> exponents);
  static FeedbackPolynomial from_exponents(std::initializer_list<int> exponents);
  static FeedbackPolynomial monomial(int exponent);
  static FeedbackPolynomial one() { return monomial(0); }

  /// Accepts "x^39+x^35+...+x+1" in any term order with optional whitespace.
  /// Repeated terms are rejected as DuplicateExponent, like from_exponents.
  static FeedbackPolynomial parse(std::string_view text);

  int degree() const noexcept;
  bool is_zero() const noexcept { return words_.empty(); }
  bool coeff(int exponent) const noexcept;
  std::size_t term_count() const noexcept;

  /// Exponents with coefficient 1, descending.
  std::vector<int> exponents() const;

  /// Canonical text: descending exponents, "x" for x^1, "1" for x^0, "0" for zero.
  std::string to_string() const;

  /// x^deg * f(1/x).
  FeedbackPolynomial reciprocal() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const FeedbackPolynomial&, const FeedbackPolynomial&) = default;

  FeedbackPolynomial& operator+=(const FeedbackPolynomial& rhs);
  friend FeedbackPolynomial operator+(FeedbackPolynomial lhs, const FeedbackPolynomial& rhs) {
    return lhs += rhs;
  }

  void flip(int exponent);
  void xor_shifted(const FeedbackPolynomial& other, int shift);

 private:
  void trim() noexcept;

  std::vector<std::uint64_t> words_;
};

FeedbackPolynomial poly_from_exponents(std::span<const int> exponents);

FeedbackPolynomial multiply(const FeedbackPolynomial& a, const FeedbackPolynomial& b);
/// Remainder of a modulo m; m must be nonzero.
FeedbackPolynomial remainder(const FeedbackPolynomial& a, const FeedbackPolynomial& m);
/// (a*b) mod m. Requires degree(m) >= 1.
FeedbackPolynomial polymul_mod(const FeedbackPolynomial& a, const FeedbackPolynomial& b,
                               const FeedbackPolynomial& m);
FeedbackPolynomial gcd(FeedbackPolynomial a, FeedbackPolynomial b);
/// x^e mod m.
FeedbackPolynomial x_pow_mod(u128 e, const FeedbackPolynomial& m);

// ---------------------------------------------------------------------------
// Integer support for the order test.

struct FactorSet {
  u128 value = 1;
  std::vector<u128> primes;  // ascending, with multiplicity

  std::vector<u128> distinct() const;
};

constexpr unsigned kMaxFactorBits = 96;

/// Deterministic for n < 3.3e24 (first 13 prime bases); above that the first
/// 20 prime bases are used and no counterexample is known below 2^96.
bool is_prime(u128 n);
/// Trial division, then Brent's Pollard rho. Requires 2 <= n <= 2^96.
FactorSet factorize(u128 n);

u128 mersenne(unsigned exponent);
std::string to_string(u128 v);
/// Parses a decimal integer; throws InvalidArgument on junk or overflow.
u128 parse_u128(std::string_view text);

bool is_irreducible(const FeedbackPolynomial& f);
/// Throws NotIrreducible, WrongFactorTarget (factors must describe 2^deg - 1).
bool is_primitive(const FeedbackPolynomial& f, const FactorSet& factors);

// ---------------------------------------------------------------------------

struct LinearComplexityProfile {
  std::vector<int> complexities;    // L_1..L_m
  FeedbackPolynomial connection;    // 1 + c_1 x + ... + c_L x^L

  int linear_complexity() const { return complexities.empty() ? 0 : complexities.back(); }
};

/// Bits are 0/1 values in generation order (index 0 is the first output).
LinearComplexityProfile berlekamp_massey(std::span<const std::uint8_t> bits);

/// True iff the LFSR with the given connection polynomial and length,
/// seeded from the first `length` bits, regenerates every bit.
bool regenerates(const FeedbackPolynomial& connection, int length,
                 std::span<const std::uint8_t> bits);

}  // namespace lili::gf2
