#include "lili/lfsr.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "lili/error.hpp"

namespace lili::lfsr {

namespace {

constexpr int kWordBits = 64;

std::size_t word_count(int n) { return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits); }

}  // namespace

LfsrSpec LfsrSpec::make(int length, std::vector<int> taps, std::string label) {
  if (length < 1) throw Error(Errc::InvalidSpec, "register length must be positive");
  std::sort(taps.begin(), taps.end(), std::greater<>());
  if (std::adjacent_find(taps.begin(), taps.end()) != taps.end())
    throw Error(Errc::InvalidSpec, "repeated feedback tap");
  for (int t : taps)
    if (t < 1 || t > length)
      throw Error(Errc::InvalidSpec, "tap " + std::to_string(t) + " outside 1.." + std::to_string(length));
  if (taps.empty() || taps.back() != 1)
    throw Error(Errc::InvalidSpec, "tap 1 is required for an invertible register");
  return LfsrSpec{length, std::move(taps), std::move(label)};
}

LfsrSpec LfsrSpec::from_feedback_polynomial(const gf2::FeedbackPolynomial& poly, std::string label) {
  const int n = poly.degree();
  if (n < 1 || !poly.coeff(0))
    throw Error(Errc::InvalidSpec, "feedback polynomial needs degree >= 1 and constant term 1");
  std::vector<int> taps;
  for (int e : poly.exponents())
    if (e > 0) taps.push_back(n - e + 1);
  return make(n, std::move(taps), std::move(label));
}

gf2::FeedbackPolynomial LfsrSpec::characteristic_polynomial() const {
  std::vector<int> exps{length};
  for (int t : feedback_taps) exps.push_back(t - 1);
  return gf2::FeedbackPolynomial::from_exponents(exps);
}

gf2::FeedbackPolynomial LfsrSpec::feedback_polynomial() const {
  return characteristic_polynomial().reciprocal();
}

LfsrSpec clock_register_spec() {
  return LfsrSpec::make(39, {38, 26, 25, 23, 9, 7, 5, 1}, "LFSR_c");
}

LfsrSpec data_register_spec() {
  return LfsrSpec::make(89, {89, 51, 48, 37, 35, 10, 7, 1}, "LFSR_d");
}

// ---------------------------------------------------------------------------

LfsrState::LfsrState(LfsrSpec spec)
    : spec_(std::move(spec)), words_(word_count(spec_.length), 0), tap_mask_(words_.size(), 0) {
  for (int t : spec_.feedback_taps)
    tap_mask_[static_cast<std::size_t>((t - 1) / kWordBits)] |= std::uint64_t{1} << ((t - 1) % kWordBits);
}

LfsrState::LfsrState(LfsrSpec spec, std::span<const std::uint8_t> stages) : LfsrState(std::move(spec)) {
  if (stages.size() != static_cast<std::size_t>(spec_.length))
    throw Error(Errc::LengthMismatch, std::to_string(stages.size()) + " stage bits for a " +
                                          std::to_string(spec_.length) + "-stage register");
  for (std::size_t i = 0; i < stages.size(); ++i)
    if (stages[i] & 1U) set_stage(static_cast<int>(i) + 1, true);
}

bool LfsrState::stage(int index) const {
  if (index < 1 || index > spec_.length)
    throw Error(Errc::PositionOutOfRange, "stage " + std::to_string(index),
                {static_cast<std::size_t>(std::max(index, 0))});
  const auto i = static_cast<unsigned>(index - 1);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void LfsrState::set_stage(int index, bool value) {
  if (index < 1 || index > spec_.length)
    throw Error(Errc::PositionOutOfRange, "stage " + std::to_string(index),
                {static_cast<std::size_t>(std::max(index, 0))});
  const auto i = static_cast<unsigned>(index - 1);
  const std::uint64_t bit = std::uint64_t{1} << (i % kWordBits);
  if (value)
    words_[i / kWordBits] |= bit;
  else
    words_[i / kWordBits] &= ~bit;
}

bool LfsrState::all_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool LfsrState::step() {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & tap_mask_[i];
  const bool w = std::popcount(acc) & 1;
  const bool out = words_[0] & 1U;
  for (std::size_t i = 0; i + 1 < words_.size(); ++i)
    words_[i] = (words_[i] >> 1) | (words_[i + 1] << (kWordBits - 1));
  words_.back() >>= 1;
  if (w) set_stage(spec_.length, true);
  if (all_zero()) degenerate_ = true;
  return out;
}

void LfsrState::step_n(int k) {
  for (int i = 0; i < k; ++i) step();
}

std::uint64_t LfsrState::extract(std::span<const int> positions) const {
  if (positions.size() > 64) throw Error(Errc::WidthMismatch, "more than 64 positions");
  std::uint64_t word = 0;
  for (std::size_t j = 0; j < positions.size(); ++j)
    if (stage(positions[j])) word |= std::uint64_t{1} << j;
  return word;
}

std::string LfsrState::dump() const {
  std::string bits;
  bits.reserve(static_cast<std::size_t>(spec_.length));
  for (int i = 1; i <= spec_.length; ++i) bits += stage(i) ? '1' : '0';
  return spec_.label + " " + std::to_string(spec_.length) + " " + bits;
}

std::vector<std::uint8_t> LfsrState::stages() const {
  std::vector<std::uint8_t> out;
  for (int i = 1; i <= spec_.length; ++i) out.push_back(stage(i) ? 1 : 0);
  return out;
}

LfsrState step(const LfsrState& state) {
  LfsrState next = state;
  next.step();
  return next;
}

LfsrState step_n(const LfsrState& state, int k) {
  if (k < 1) throw Error(Errc::InvalidArgument, "step count must be >= 1");
  LfsrState next = state;
  next.step_n(k);
  return next;
}

std::uint64_t extract(const LfsrState& state, std::span<const int> positions) {
  return state.extract(positions);
}

std::vector<std::uint8_t> emit(LfsrState state, std::size_t count) {
  std::vector<std::uint8_t> out(count);
  for (auto& b : out) b = state.step() ? 1 : 0;
  return out;
}

bool satisfies_recurrence(const gf2::FeedbackPolynomial& connection,
                          std::span<const std::uint8_t> bits) {
  const int n = connection.degree();
  if (n < 1 || !connection.coeff(0)) return false;
  std::vector<int> lags;
  for (int e : connection.exponents())
    if (e > 0) lags.push_back(e);
  for (std::size_t t = static_cast<std::size_t>(n); t < bits.size(); ++t) {
    unsigned v = 0;
    for (int e : lags) v ^= bits[t - static_cast<std::size_t>(e)];
    if (v != bits[t]) return false;
  }
  return true;
}

bool consistency_check(const LfsrSpec& spec, const gf2::FeedbackPolynomial& poly,
                       std::size_t sample_bits) {
  if (poly.degree() != spec.length) return false;
  if (spec.feedback_polynomial() != poly) return false;
  LfsrState seed(spec);
  seed.set_stage(1, true);
  return satisfies_recurrence(poly, emit(seed, sample_bits));
}

}  // namespace lili::lfsr
