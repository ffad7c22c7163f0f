#include "lili/generator.hpp"

#include <cctype>
#include <cstdio>
#include <set>

#include "lili/error.hpp"

namespace lili::cipher {

namespace {

constexpr std::string_view kFilterText =
    "x5+x4+x3+x2+x10*x6+x10*x4+x9*x3+x9*x1+x8*x2+x8*x1+x7*x6+x10*x9*x5+x10*x9*x4+x10*x9*x3+x10*x9*x2+"
    "x10*x8*x4+x10*x8*x3+x10*x7*x6+x10*x7*x5+x10*x7*x4+x9*x8*x6+x9*x8*x3+x9*x7*x6+x9*x7*x4+x9*x7*x3+"
    "x10*x9*x8*x6+x10*x9*x8*x4+x10*x9*x8*x3+x10*x9*x8*x1+x10*x9*x7*x6+x10*x9*x7*x4+x10*x9*x7*x2+"
    "x10*x8*x7*x5+x10*x8*x7*x3+x9*x8*x7*x4+x9*x8*x7*x2+x9*x7*x6*x5+x9*x7*x6*x4+x10*x9*x8*x7*x4+x10*x9*x8*x7*x3+"
    "x10*x9*x7*x6*x5+x10*x9*x7*x6*x4+x9*x8*x7*x6*x5+x9*x8*x7*x6*x4+x10*x9*x8*x7*x6*x5+x10*x9*x8*x7*x6*x4";

constexpr std::string_view kExpandedFilterText =
    "x13+x8+x4+x2+x81*x21+x81*x8+x66*x4+x66*x1+x45*x2+x45*x1+x31*x21+x81*x66*x13+x81*x66*x8+x81*x66*x4+"
    "x81*x66*x2+x81*x45*x8+x81*x45*x4+x81*x31*x21+x81*x31*x13+x81*x31*x8+x66*x45*x21+x66*x45*x4+"
    "x66*x31*x21+x66*x31*x8+x66*x31*x4+x81*x66*x45*x21+x81*x66*x45*x8+x81*x66*x45*x4+x81*x66*x45*x1+"
    "x81*x66*x31*x21+x81*x66*x31*x8+x81*x66*x31*x2+x81*x45*x31*x13+x81*x45*x31*x4+x66*x45*x31*x8+"
    "x66*x45*x31*x2+x66*x31*x21*x13+x66*x31*x21*x8+x81*x66*x45*x31*x8+x81*x66*x45*x31*x4+x81*x66*x31*x21*x13+"
    "x81*x66*x31*x21*x8+x66*x45*x31*x21*x13+x66*x45*x31*x21*x8+x81*x66*x45*x31*x21*x13+x81*x66*x45*x31*x21*x8";

std::uint64_t fnv1a(std::string_view data, std::uint64_t h = 0xcbf29ce484222325ULL) {
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Keys

KeyMaterial KeyMaterial::from_ascii(std::string_view text) {
  if (text.size() != kKeyBytes)
    throw Error(Errc::BadKeyLength, "ASCII key must have 16 characters, got " + std::to_string(text.size()));
  KeyMaterial k;
  for (std::size_t i = 0; i < text.size(); ++i) k.bytes[i] = static_cast<std::uint8_t>(text[i]);
  k.source = "ascii:" + std::string(text);
  return k;
}

KeyMaterial KeyMaterial::from_hex(std::string_view text) {
  if (text.size() != 2 * kKeyBytes)
    throw Error(Errc::BadKeyLength, "hex key must have 32 digits, got " + std::to_string(text.size()));
  KeyMaterial k;
  for (std::size_t i = 0; i < kKeyBytes; ++i) {
    const int hi = hex_value(text[2 * i]);
    const int lo = hex_value(text[2 * i + 1]);
    if (hi < 0 || lo < 0) throw Error(Errc::SyntaxError, "bad hex digit in key", {2 * i});
    k.bytes[i] = static_cast<std::uint8_t>(hi << 4 | lo);
  }
  k.source = "hex:" + k.hex();
  return k;
}

bool KeyMaterial::bit(int k) const {
  if (k < 1 || k > kKeyBits) throw Error(Errc::PositionOutOfRange, "key bit " + std::to_string(k));
  const auto i = static_cast<std::size_t>(k - 1);
  return (bytes[i / 8] >> (7 - i % 8)) & 1U;
}

std::string KeyMaterial::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (auto b : bytes) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

// ---------------------------------------------------------------------------
// Filters and configuration

std::string_view filter_text() { return kFilterText; }
std::string_view expanded_filter_text() { return kExpandedFilterText; }

boolfn::AnfPolynomial default_filter() { return boolfn::parse_anf(kFilterText, 10); }
boolfn::AnfPolynomial default_expanded_filter() { return boolfn::parse_anf(kExpandedFilterText, 89); }

void GeneratorConfig::validate() const {
  auto check = [](int pos, int len, const char* what) {
    if (pos < 1 || pos > len)
      throw Error(Errc::PositionOutOfRange,
                  std::string(what) + " position " + std::to_string(pos) + " outside 1.." + std::to_string(len),
                  {static_cast<std::size_t>(std::max(pos, 0))});
  };
  check(clock_positions.first, clock_spec.length, "clock");
  check(clock_positions.second, clock_spec.length, "clock");
  if (data_positions.size() != static_cast<std::size_t>(filter.variables()))
    throw Error(Errc::WidthMismatch, std::to_string(data_positions.size()) + " data positions for a " +
                                         std::to_string(filter.variables()) + "-variable filter");
  if (filter.variables() > boolfn::kMaxTableVariables)
    throw Error(Errc::TooManyVariables, "filter must have at most 24 variables");
  std::set<int> seen;
  for (int p : data_positions) {
    check(p, data_spec.length, "data");
    if (!seen.insert(p).second)
      throw Error(Errc::NonInjectiveMap, "data position " + std::to_string(p) + " repeated",
                  {static_cast<std::size_t>(p)});
  }
}

std::string GeneratorConfig::fingerprint() const {
  std::uint64_t h = fnv1a(boolfn::print_anf(filter));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return "filter-fnv1a=" + std::string(buf) + " terms=" + std::to_string(filter.term_count()) +
         " data-positions=" + join(data_positions) + " clock-positions=" +
         std::to_string(clock_positions.first) + "," + std::to_string(clock_positions.second) +
         " lfsr-c-taps=" + join(clock_spec.feedback_taps) + " lfsr-d-taps=" + join(data_spec.feedback_taps);
}

// ---------------------------------------------------------------------------
// Generator

Generator::Generator(GeneratorConfig config, const KeyMaterial& key) : Generator(std::move(config), key, std::nullopt) {}

Generator Generator::with_expanded_filter(GeneratorConfig config, const KeyMaterial& key,
                                          boolfn::AnfPolynomial expanded) {
  return Generator(std::move(config), key, std::move(expanded));
}

Generator::Generator(GeneratorConfig config, const KeyMaterial& key,
                     std::optional<boolfn::AnfPolynomial> expanded)
    : config_(std::move(config)), c_state_(config_.clock_spec), d_state_(config_.data_spec) {
  const int lc = config_.clock_spec.length;
  const int ld = config_.data_spec.length;
  if (lc + ld > kKeyBits)
    throw Error(Errc::InvalidSpec, "registers need more than 128 key bits");
  if (expanded) {
    if (ld > boolfn::kMaxVariables || expanded->variables() > ld)
      throw Error(Errc::WidthMismatch, "expanded filter wider than the data register");
    expanded_ = true;
    expanded_terms_.assign(expanded->monomials().begin(), expanded->monomials().end());
  } else {
    config_.validate();
    const auto table = boolfn::anf_to_truth_table(config_.filter);
    table_.assign(table.outputs().begin(), table.outputs().end());
  }

  for (int i = 1; i <= lc; ++i) c_state_.set_stage(i, key.bit(i));
  for (int i = 1; i <= ld; ++i) d_state_.set_stage(i, key.bit(lc + i));
  if (c_state_.all_zero()) throw Error(Errc::ZeroRegister, "LFSR_c loaded with zeros", {0});
  if (d_state_.all_zero()) throw Error(Errc::ZeroRegister, "LFSR_d loaded with zeros", {1});
}

bool Generator::output() const {
  if (expanded_) {
    const auto words = d_state_.words();
    boolfn::VarMask state = words[0];
    if (words.size() > 1) state |= static_cast<boolfn::VarMask>(words[1]) << 64;
    bool v = false;
    for (boolfn::VarMask m : expanded_terms_) v ^= (state & m) == m;
    return v;
  }
  return table_[d_state_.extract(config_.data_positions)] != 0;
}

void Generator::clock() {
  last_clock_ = clock_function(c_state_.stage(config_.clock_positions.first),
                               c_state_.stage(config_.clock_positions.second));
  c_state_.step();
  d_state_.step_n(last_clock_);
  data_steps_ += static_cast<std::uint64_t>(last_clock_);
  ++bits_emitted_;
}

bool Generator::next_bit() {
  if (c_state_.all_zero() || d_state_.all_zero())
    throw Error(Errc::DegenerateState, "a register is all-zero");
  const bool z = output();
  clock();
  return z;
}

recon::Observation Generator::next_observation() {
  if (expanded_) throw Error(Errc::InvalidArgument, "replay needs the extracted-input form");
  const auto word = static_cast<std::uint16_t>(d_state_.extract(config_.data_positions));
  const bool z = next_bit();
  return {word, static_cast<std::uint8_t>(z)};
}

std::string Generator::dump() const { return c_state_.dump() + "\n" + d_state_.dump() + "\n"; }

std::pair<bool, Generator> next_bit(const Generator& state) {
  Generator next = state;
  const bool z = next.next_bit();
  return {z, std::move(next)};
}

std::vector<std::uint8_t> keystream(const KeyMaterial& key, std::size_t n, const GeneratorConfig& config) {
  if (n < 1) throw Error(Errc::InvalidArgument, "keystream length must be >= 1");
  Generator g(config, key);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = g.next_bit() ? 1 : 0;
  return out;
}

EquivalenceResult equivalence_check(const KeyMaterial& key, std::size_t n, const GeneratorConfig& config,
                                    const boolfn::AnfPolynomial& expanded) {
  if (n < 1) throw Error(Errc::InvalidArgument, "comparison length must be >= 1");
  Generator a(config, key);
  Generator b = Generator::with_expanded_filter(config, key, expanded);
  EquivalenceResult r;
  for (std::size_t i = 0; i < n; ++i) {
    ++r.bits_compared;
    if (a.next_bit() != b.next_bit()) {
      r.first_mismatch = i;
      return r;
    }
  }
  r.equivalent = true;
  return r;
}

EquivalenceResult equivalence_check(const KeyMaterial& key, std::size_t n, const GeneratorConfig& config) {
  config.validate();
  const auto expanded = boolfn::relabel(config.filter, config.data_positions, config.data_spec.length);
  return equivalence_check(key, n, config, expanded);
}

recon::ObservationSet replay(const KeyMaterial& key, std::size_t n, const GeneratorConfig& config) {
  if (n < 1) throw Error(Errc::InvalidArgument, "replay length must be >= 1");
  if (config.filter.variables() != recon::kFilterInputs)
    throw Error(Errc::WidthMismatch, "replay expects a 10-input filter");
  Generator g(config, key);
  recon::ObservationSet obs;
  obs.key_id = key.source;
  obs.pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) obs.pairs.push_back(g.next_observation());
  return obs;
}

// ---------------------------------------------------------------------------
// Keystream text

std::string format_keystream(std::span<const std::uint8_t> bits, KeystreamFormat format) {
  std::string out;
  if (format == KeystreamFormat::Bits) {
    out.reserve(bits.size());
    for (auto b : bits) out += b ? '1' : '0';
    return out;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::size_t i = 0; i < bits.size(); i += 8) {
    unsigned byte = 0;
    for (std::size_t j = 0; j < 8; ++j) byte = byte << 1 | (i + j < bits.size() ? (bits[i + j] & 1U) : 0U);
    out += kDigits[byte >> 4];
    out += kDigits[byte & 15];
  }
  return out;
}

std::vector<std::uint8_t> parse_keystream(std::string_view text, KeystreamFormat format) {
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (format == KeystreamFormat::Bits) {
      if (c != '0' && c != '1') throw Error(Errc::SyntaxError, "expected 0 or 1", {i});
      bits.push_back(c == '1');
    } else {
      const int v = hex_value(c);
      if (v < 0) throw Error(Errc::SyntaxError, "expected a hex digit", {i});
      for (int b = 3; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>((v >> b) & 1));
    }
  }
  return bits;
}

}  // namespace lili::cipher
