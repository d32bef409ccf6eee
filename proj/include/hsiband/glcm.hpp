#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsiband/cube.hpp"
#include "hsiband/quantize.hpp"

namespace hsiband {

struct GlcmParams {
  int levels = 8;  // gray levels for the co-occurrence quantization
  int drow = 0;    // displacement of the paired pixel
  int dcol = 1;
  bool symmetric = true;
};

// Normalized co-occurrence probabilities, probs[i * levels + j].
// Sums to 1; symmetric builds equal their transpose exactly.
struct CooccurrenceMatrix {
  int levels = 0;
  std::vector<double> probs;

  double at(int i, int j) const {
    return probs[static_cast<std::size_t>(i) * levels + j];
  }
};

CooccurrenceMatrix glcm(const QuantizedBand& image, const GlcmParams& params);

// Inverse difference moment: sum of P(i,j) / (1 + (i-j)^2). In (0, 1];
// equals 1 exactly iff all mass lies on the diagonal.
double homogeneity(const CooccurrenceMatrix& c);

// Quantize then glcm then homogeneity. A constant band gives exactly 1.
double band_homogeneity(std::span<const std::uint16_t> band, int rows,
                        int cols, const GlcmParams& params);
double band_homogeneity(const Cube& cube, int band, const GlcmParams& params);

}  // namespace hsiband
