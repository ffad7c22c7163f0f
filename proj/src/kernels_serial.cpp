#include "lili/kernels.hpp"

namespace lili::kernels {

void moebius_serial(std::span<std::uint8_t> table) {
  const std::size_t size = table.size();
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) table[j + h] ^= table[j];
}

void walsh_serial(std::span<std::int64_t> values) {
  const std::size_t size = values.size();
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = values[j];
        const std::int64_t b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
}

}  // namespace lili::kernels
