#pragma once

#include <cstdint>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace hsiband::rng {

// Draws built directly on the mt19937_64 word stream. The engine's
// output sequence is fixed by the standard, so everything here is
// reproducible independent of the standard library's distribution
// implementations.

// Unbiased integer in [0, n).
inline std::uint64_t bounded(std::mt19937_64& g, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = g();
    if (x >= threshold) return x % n;
  }
}

// Uniform double in (0, 1].
inline double unit_open(std::mt19937_64& g) {
  return static_cast<double>((g() >> 11) + 1) * 0x1.0p-53;
}

// Standard normal via Box-Muller. Two words per sample; the sine
// partner is discarded so the draw count per sample stays fixed.
inline double gaussian(std::mt19937_64& g) {
  const double u1 = unit_open(g);
  const double u2 = unit_open(g);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

inline std::uint16_t uniform_u16(std::mt19937_64& g) {
  return static_cast<std::uint16_t>(g() & 0xFFFFu);
}

// Fisher-Yates with bounded() draws.
template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace hsiband::rng
