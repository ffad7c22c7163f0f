#pragma once

#include <cstdint>
#include <span>

// Butterfly kernels over 2^n-entry tables. The *_serial versions are the
// reference implementations; the *_parallel versions split each butterfly
// stage across OpenMP threads and must produce identical results.
namespace lili::kernels {

/// In-place GF(2) Möbius (zeta) transform. It is its own inverse.
void moebius_serial(std::span<std::uint8_t> table);
void moebius_parallel(std::span<std::uint8_t> table);

/// In-place unnormalized Walsh–Hadamard transform.
void walsh_serial(std::span<std::int64_t> values);
void walsh_parallel(std::span<std::int64_t> values);

/// Tables below this size are not worth a parallel region.
constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

inline void moebius(std::span<std::uint8_t> table) {
  table.size() >= kParallelThreshold ? moebius_parallel(table) : moebius_serial(table);
}

inline void walsh(std::span<std::int64_t> values) {
  values.size() >= kParallelThreshold ? walsh_parallel(values) : walsh_serial(values);
}

int max_threads() noexcept;

}  // namespace lili::kernels
