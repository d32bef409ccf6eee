#include "hsiband/quantize.hpp"

#include <algorithm>
#include <cstdint>

#include "hsiband/error.hpp"

namespace hsiband {

QuantizedBand quantize_band(std::span<const std::uint16_t> band, int rows,
                            int cols, int levels) {
  if (levels < 2 || levels > 65536)
    fail(errc::invalid_levels, "quantization needs 2 <= levels <= 65536");
  if (band.empty()) fail(errc::empty_band, "cannot quantize an empty band");
  if (rows < 1 || cols < 1 ||
      band.size() != static_cast<std::size_t>(rows) * cols)
    fail(errc::shape_mismatch, "band length != rows*cols");

  const auto [mn_it, mx_it] = std::minmax_element(band.begin(), band.end());
  const std::uint32_t mn = *mn_it;
  const std::uint32_t mx = *mx_it;

  QuantizedBand q;
  q.rows = rows;
  q.cols = cols;
  q.levels = levels;
  q.values.assign(band.size(), 0);
  if (mn == mx) return q;  // constant band: all zeros

  // Integer round-half-up of (v - mn) * (levels-1) / (mx - mn):
  // round(a/b) = (2a + b) / (2b). Largest numerator is
  // 2 * 65535 * 65535 + 65536, well inside 64 bits.
  const std::uint64_t span = mx - mn;
  for (std::size_t i = 0; i < band.size(); ++i) {
    const std::uint64_t a =
        static_cast<std::uint64_t>(band[i] - mn) * (levels - 1);
    q.values[i] = static_cast<std::uint16_t>((2 * a + span) / (2 * span));
  }
  return q;
}

QuantizedBand quantize_band(const Cube& cube, int band, int levels) {
  return quantize_band(cube.band(band), cube.rows, cube.cols, levels);
}

}  // namespace hsiband
