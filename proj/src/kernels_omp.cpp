#include <omp.h>

#include <cstddef>

#include "lili/kernels.hpp"

namespace lili::kernels {

// One parallel region for all stages. Early stages have many short blocks and
// are split by block; late stages have few long blocks and are split inside
// each block. The implicit barrier after each `omp for` orders the stages.

namespace {

template <class T, class Butterfly>
void butterfly_stages(T* data, std::ptrdiff_t size, Butterfly op) {
#pragma omp parallel
  {
    const std::ptrdiff_t threads = omp_get_num_threads();
    for (std::ptrdiff_t h = 1; h < size; h <<= 1) {
      const std::ptrdiff_t blocks = size / (2 * h);
      if (blocks >= threads) {
#pragma omp for schedule(static)
        for (std::ptrdiff_t b = 0; b < blocks; ++b) {
          T* lo = data + b * 2 * h;
          for (std::ptrdiff_t j = 0; j < h; ++j) op(lo[j], lo[j + h]);
        }
      } else {
        for (std::ptrdiff_t b = 0; b < blocks; ++b) {
          T* lo = data + b * 2 * h;
#pragma omp for schedule(static)
          for (std::ptrdiff_t j = 0; j < h; ++j) op(lo[j], lo[j + h]);
        }
      }
    }
  }
}

}  // namespace

void moebius_parallel(std::span<std::uint8_t> table) {
  butterfly_stages(table.data(), static_cast<std::ptrdiff_t>(table.size()),
                   [](std::uint8_t& a, std::uint8_t& b) { b ^= a; });
}

void walsh_parallel(std::span<std::int64_t> values) {
  butterfly_stages(values.data(), static_cast<std::ptrdiff_t>(values.size()), [](std::int64_t& a, std::int64_t& b) {
    const std::int64_t s = a + b;
    b = a - b;
    a = s;
  });
}

int max_threads() noexcept { return omp_get_max_threads(); }

}  // namespace lili::kernels
