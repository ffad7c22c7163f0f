#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lili::recon {

constexpr int kFilterInputs = 10;
constexpr std::size_t kInputSpace = std::size_t{1} << kFilterInputs;

struct Observation {
  std::uint16_t word = 0;  // filter input, x_1 = LSB
  std::uint8_t bit = 0;    // keystream bit produced from it

  friend bool operator==(const Observation&, const Observation&) = default;
};

struct ObservationSet {
  std::vector<Observation> pairs;
  std::string key_id;
};

/// One "wwwwwwwwww b" line per pair; the word is binary with x_1 rightmost.
std::string format_observations(const ObservationSet& obs);
/// Blank lines and '#' comments are skipped. Throws SyntaxError (detail = line).
ObservationSet parse_observations(std::string_view text);

}  // namespace lili::recon
