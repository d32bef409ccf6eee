#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsiband/cube.hpp"

namespace hsiband {

// Discrete raster with values in [0, levels).
struct QuantizedBand {
  int rows = 0;
  int cols = 0;
  int levels = 0;
  std::vector<std::uint16_t> values;

  std::uint16_t at(int r, int c) const {
    return values[static_cast<std::size_t>(r) * cols + c];
  }
};

// Per-band min/max linear scaling onto [0, levels-1] with round half up:
//   q = round((v - min) * (levels-1) / (max - min))
// A constant band maps to all zeros. Monotone non-decreasing in v.
QuantizedBand quantize_band(std::span<const std::uint16_t> band, int rows,
                            int cols, int levels);
QuantizedBand quantize_band(const Cube& cube, int band, int levels);

}  // namespace hsiband
