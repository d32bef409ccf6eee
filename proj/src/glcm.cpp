#include "hsiband/glcm.hpp"

#include <cstdint>

#include "hsiband/error.hpp"

namespace hsiband {

CooccurrenceMatrix glcm(const QuantizedBand& image, const GlcmParams& params) {
  if (params.levels < 2)
    fail(errc::invalid_levels, "glcm needs levels >= 2");
  if (params.drow == 0 && params.dcol == 0)
    fail(errc::invalid_spec, "glcm offset must be nonzero");

  const int L = params.levels;
  for (const auto v : image.values) {
    if (v >= L)
      fail(errc::level_overflow,
           "image value " + std::to_string(v) + " >= glcm levels " +
               std::to_string(L));
  }

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(L) * L, 0);
  std::uint64_t total = 0;
  for (int r = 0; r < image.rows; ++r) {
    const int r2 = r + params.drow;
    if (r2 < 0 || r2 >= image.rows) continue;
    for (int c = 0; c < image.cols; ++c) {
      const int c2 = c + params.dcol;
      if (c2 < 0 || c2 >= image.cols) continue;
      ++counts[static_cast<std::size_t>(image.at(r, c)) * L +
               image.at(r2, c2)];
      ++total;
    }
  }
  if (total == 0)
    fail(errc::no_pairs, "image too small for the glcm offset");

  if (params.symmetric) {
    // counts += transpose(counts)
    std::vector<std::uint64_t> sym(counts.size());
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j)
        sym[static_cast<std::size_t>(i) * L + j] =
            counts[static_cast<std::size_t>(i) * L + j] +
            counts[static_cast<std::size_t>(j) * L + i];
    counts.swap(sym);
    total *= 2;
  }

  CooccurrenceMatrix m;
  m.levels = L;
  m.probs.resize(counts.size());
  const double n = static_cast<double>(total);
  for (std::size_t i = 0; i < counts.size(); ++i)
    m.probs[i] = static_cast<double>(counts[i]) / n;
  return m;
}

double homogeneity(const CooccurrenceMatrix& c) {
  double sum = 0.0;
  for (int i = 0; i < c.levels; ++i) {
    for (int j = 0; j < c.levels; ++j) {
      const double d = static_cast<double>(i - j);
      sum += c.at(i, j) / (1.0 + d * d);
    }
  }
  return sum;
}

double band_homogeneity(std::span<const std::uint16_t> band, int rows,
                        int cols, const GlcmParams& params) {
  return homogeneity(glcm(quantize_band(band, rows, cols, params.levels),
                          params));
}

double band_homogeneity(const Cube& cube, int band, const GlcmParams& params) {
  return band_homogeneity(cube.band(band), cube.rows, cube.cols, params);
}

}  // namespace hsiband
