#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lili/gf2poly.hpp"

namespace lili::lfsr {

/// Fibonacci register with stages s[1..N] read left to right. One step
/// computes w = XOR of s[t] over the taps, shifts left (s[i] <- s[i+1]) and
/// writes w into s[N]. The bit leaving s[1] is the register's output.
struct LfsrSpec {
  int length = 0;
  std::vector<int> feedback_taps;  // 1-based, descending
  std::string label;

  /// Throws InvalidSpec unless 1 <= taps <= N, taps distinct and tap 1 present.
  static LfsrSpec make(int length, std::vector<int> taps, std::string label);
  /// Register whose output obeys the recurrence of the connection polynomial
  /// `poly` (constant term required): exponent e >= 1 becomes tap N-e+1.
  static LfsrSpec from_feedback_polynomial(const gf2::FeedbackPolynomial& poly, std::string label);

  /// x^N + sum over taps of x^(t-1): the recurrence obeyed by the output.
  gf2::FeedbackPolynomial characteristic_polynomial() const;
  /// Reciprocal of the characteristic polynomial (connection form 1 + ... + x^N).
  gf2::FeedbackPolynomial feedback_polynomial() const;
};

LfsrSpec clock_register_spec();  // 39 stages, taps {38,26,25,23,9,7,5,1}
LfsrSpec data_register_spec();   // 89 stages, taps {89,51,48,37,35,10,7,1}

class LfsrState {
 public:
  /// All-zero register.
  explicit LfsrState(LfsrSpec spec);
  /// `stages` holds s[1..N] as 0/1 values. Throws LengthMismatch.
  LfsrState(LfsrSpec spec, std::span<const std::uint8_t> stages);

  const LfsrSpec& spec() const noexcept { return spec_; }
  int length() const noexcept { return spec_.length; }

  bool stage(int index) const;
  void set_stage(int index, bool value);
  bool all_zero() const noexcept;
  /// Set by a step taken from the all-zero fixed point.
  bool degenerate() const noexcept { return degenerate_; }

  /// In-place clocking; returns the bit that left s[1].
  bool step();
  void step_n(int k);

  /// Bit j-1 of the result is s[positions[j-1]] (x_1 = LSB). At most 64 positions.
  std::uint64_t extract(std::span<const int> positions) const;

  /// s[1] is bit 0 of word 0.
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// "<label> <N> <s[1]..s[N] as 0/1>"
  std::string dump() const;
  std::vector<std::uint8_t> stages() const;

  friend bool operator==(const LfsrState& a, const LfsrState& b) {
    return a.spec_.length == b.spec_.length && a.spec_.feedback_taps == b.spec_.feedback_taps &&
           a.words_ == b.words_;
  }

 private:
  LfsrSpec spec_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> tap_mask_;
  bool degenerate_ = false;
};

LfsrState step(const LfsrState& state);
LfsrState step_n(const LfsrState& state, int k);
std::uint64_t extract(const LfsrState& state, std::span<const int> positions);

/// Output bits (s[1] before each step) for `count` steps.
std::vector<std::uint8_t> emit(LfsrState state, std::size_t count);

/// True iff the tap set matches `poly` under tap t <-> exponent N-(t-1) of
/// poly (i.e. poly is the reciprocal of the characteristic polynomial) and
/// `sample_bits` emitted bits from a nonzero seed satisfy poly's recurrence.
/// A degree mismatch returns false.
bool consistency_check(const LfsrSpec& spec, const gf2::FeedbackPolynomial& poly,
                       std::size_t sample_bits = 4096);

/// a_t = sum_{e>0, coeff e} a_{t-e} for every t >= degree.
bool satisfies_recurrence(const gf2::FeedbackPolynomial& connection,
                          std::span<const std::uint8_t> bits);

}  // namespace lili::lfsr
