#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lili/boolfn.hpp"
#include "lili/lfsr.hpp"
#include "lili/observations.hpp"

namespace lili::cipher {

constexpr int kKeyBits = 128;
constexpr int kKeyBytes = kKeyBits / 8;

/// 128 key bits. Bit k (1-based) is bit 7-((k-1)%8) of byte (k-1)/8, i.e.
/// bytes in text order, MSB first.
struct KeyMaterial {
  std::array<std::uint8_t, kKeyBytes> bytes{};
  std::string source;

  /// Exactly 16 characters. Throws BadKeyLength.
  static KeyMaterial from_ascii(std::string_view text);
  /// Exactly 32 hex digits. Throws BadKeyLength or SyntaxError.
  static KeyMaterial from_hex(std::string_view text);

  bool bit(int k) const;
  std::string hex() const;
};

/// c = 2*y1 + y2 + 1, always in {1,2,3,4}.
constexpr int clock_function(bool y1, bool y2) noexcept { return 2 * int{y1} + int{y2} + 1; }

/// The 46-term filter over x1..x10.
std::string_view filter_text();
/// The same filter written directly over LFSR_d stages x1..x89.
std::string_view expanded_filter_text();
boolfn::AnfPolynomial default_filter();
boolfn::AnfPolynomial default_expanded_filter();

inline constexpr std::array<int, 10> kDataPositions{1, 2, 4, 8, 13, 21, 31, 45, 66, 81};
inline constexpr std::pair<int, int> kClockPositions{13, 21};

struct GeneratorConfig {
  std::pair<int, int> clock_positions = kClockPositions;  // (y1, y2) stages of LFSR_c
  std::vector<int> data_positions{kDataPositions.begin(), kDataPositions.end()};
  boolfn::AnfPolynomial filter = default_filter();
  lfsr::LfsrSpec clock_spec = lfsr::clock_register_spec();
  lfsr::LfsrSpec data_spec = lfsr::data_register_spec();

  /// Throws PositionOutOfRange / WidthMismatch / NonInjectiveMap.
  void validate() const;
  /// FNV-1a over the canonical filter text, positions and register specs.
  std::string fingerprint() const;
};

/// Clock-controlled generator. Each output is produced from the current
/// state, then LFSR_c steps once and LFSR_d steps c times, with c taken from
/// LFSR_c before its step.
class Generator {
 public:
  /// Filter applied to the 10 extracted stages (via its truth table).
  Generator(GeneratorConfig config, const KeyMaterial& key);

  /// Same clocking, but the output is `expanded` (over all data-register
  /// stages) evaluated directly on LFSR_d. data_positions/filter of the
  /// config are unused in this form.
  static Generator with_expanded_filter(GeneratorConfig config, const KeyMaterial& key,
                                        boolfn::AnfPolynomial expanded);

  bool next_bit();
  /// Filter input word and output for the current state, then clocks.
  recon::Observation next_observation();

  const GeneratorConfig& config() const noexcept { return config_; }
  const lfsr::LfsrState& clock_register() const noexcept { return c_state_; }
  const lfsr::LfsrState& data_register() const noexcept { return d_state_; }
  std::uint64_t bits_emitted() const noexcept { return bits_emitted_; }
  std::uint64_t data_steps() const noexcept { return data_steps_; }
  int last_clock() const noexcept { return last_clock_; }

  /// Two dump lines, LFSR_c first.
  std::string dump() const;

 private:
  Generator(GeneratorConfig config, const KeyMaterial& key, std::optional<boolfn::AnfPolynomial> expanded);

  bool output() const;
  void clock();

  GeneratorConfig config_;
  lfsr::LfsrState c_state_;
  lfsr::LfsrState d_state_;
  std::vector<std::uint8_t> table_;
  std::vector<boolfn::VarMask> expanded_terms_;
  bool expanded_ = false;
  std::uint64_t bits_emitted_ = 0;
  std::uint64_t data_steps_ = 0;
  int last_clock_ = 0;
};

/// Pure form: the bit and the successor state.
std::pair<bool, Generator> next_bit(const Generator& state);

std::vector<std::uint8_t> keystream(const KeyMaterial& key, std::size_t n,
                                    const GeneratorConfig& config = {});

struct EquivalenceResult {
  bool equivalent = false;
  std::size_t bits_compared = 0;
  std::optional<std::size_t> first_mismatch;  // 0-based
};

/// Form A: config.filter on the extracted stages. Form B: `expanded` on the
/// whole LFSR_d state.
EquivalenceResult equivalence_check(const KeyMaterial& key, std::size_t n, const GeneratorConfig& config,
                                    const boolfn::AnfPolynomial& expanded);
/// Form B derived as relabel(config.filter, config.data_positions).
EquivalenceResult equivalence_check(const KeyMaterial& key, std::size_t n,
                                    const GeneratorConfig& config = {});

recon::ObservationSet replay(const KeyMaterial& key, std::size_t n, const GeneratorConfig& config = {});

enum class KeystreamFormat { Hex, Bits };

/// Hex packs MSB-first per byte in emission order, zero-padding the tail.
std::string format_keystream(std::span<const std::uint8_t> bits, KeystreamFormat format);
/// Whitespace is ignored. Throws SyntaxError.
std::vector<std::uint8_t> parse_keystream(std::string_view text, KeystreamFormat format);

}  // namespace lili::cipher
