#include "lili/observations.hpp"

#include <sstream>

#include "lili/error.hpp"

namespace lili::recon {

std::string format_observations(const ObservationSet& obs) {
  std::string out;
  out.reserve(obs.pairs.size() * (kFilterInputs + 3));
  for (const auto& p : obs.pairs) {
    for (int j = kFilterInputs - 1; j >= 0; --j) out += ((p.word >> j) & 1U) ? '1' : '0';
    out += ' ';
    out += p.bit ? '1' : '0';
    out += '\n';
  }
  return out;
}

ObservationSet parse_observations(std::string_view text) {
  ObservationSet obs;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string word, bit, extra;
    fields >> word >> bit;
    const bool ok = word.size() == kFilterInputs && word.find_first_not_of("01") == std::string::npos &&
                    (bit == "0" || bit == "1") && !(fields >> extra);
    if (!ok) throw Error(Errc::SyntaxError, "bad observation on line " + std::to_string(line_no), {line_no});
    Observation o;
    for (char c : word) o.word = static_cast<std::uint16_t>(o.word << 1 | (c == '1'));
    o.bit = bit == "1";
    obs.pairs.push_back(o);
  }
  return obs;
}

}  // namespace lili::recon
