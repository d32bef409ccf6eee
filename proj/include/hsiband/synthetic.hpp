#pragma once

#include <cstdint>

#include "hsiband/cube.hpp"

namespace hsiband {

// Desk-scale test cube: a block-partitioned label grid, per-class
// constant signal bands with additive Gaussian noise, uniform pure-noise
// bands, and exact duplicates of the signal bands.
//
// Band layout: [0, n_signal) signal, then [n_signal, n_signal + n_noise)
// noise, then duplicates (round-robin copies of the signal bands).
struct SyntheticSpec {
  int rows = 0;
  int cols = 0;
  int n_classes = 0;  // 1..16
  int n_signal = 0;
  int n_noise = 0;
  int n_redundant = 0;
  double noise_sigma = 0.0;  // stddev of the additive noise, intensity units
  std::uint64_t seed = 0;

  int total_bands() const { return n_signal + n_noise + n_redundant; }
};

struct SyntheticData {
  Cube cube;
  GroundTruthMap gt;
};

// Pure function of the spec: identical specs give byte-identical output.
// The grid is split into n_classes contiguous row-major blocks labeled
// 1..n_classes; remainder pixels (grid size not divisible) get label 0.
SyntheticData generate_synthetic(const SyntheticSpec& spec);

}  // namespace hsiband
