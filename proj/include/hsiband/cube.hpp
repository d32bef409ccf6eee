#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hsiband/error.hpp"

namespace hsiband {

// Band-sequential raster cube of unsigned 16-bit samples.
// Layout: samples[b * rows * cols + r * cols + c].
struct Cube {
  int bands = 0;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint16_t> samples;

  Cube() = default;
  Cube(int bands, int rows, int cols, std::vector<std::uint16_t> samples);

  std::size_t pixels_per_band() const {
    return static_cast<std::size_t>(rows) * cols;
  }

  std::span<const std::uint16_t> band(int b) const;

  std::uint16_t at(int b, int r, int c) const {
    return samples[static_cast<std::size_t>(b) * pixels_per_band() +
                   static_cast<std::size_t>(r) * cols + c];
  }
};

// Per-pixel class labels, row-major. 0 means unidentified; valid
// classes are 1..16.
struct GroundTruthMap {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint16_t> labels;

  GroundTruthMap() = default;
  GroundTruthMap(int rows, int cols, std::vector<std::uint16_t> labels);

  std::uint16_t at(int r, int c) const {
    return labels[static_cast<std::size_t>(r) * cols + c];
  }
};

inline constexpr int kMaxLabel = 16;
inline constexpr int kGtLevels = kMaxLabel + 1;  // label alphabet incl. 0

// Cube files come in pairs: a text header (`key = value` lines with keys
// samples, lines, bands, data type, interleave, byte order) and a raw
// file holding little-endian u16 samples in BSQ order. Only data type 12,
// interleave bsq and byte order 0 are accepted. The raw path is the
// header path with a ".hdr" extension swapped for ".raw" (or ".raw"
// appended when the header has some other name).
std::filesystem::path raw_path_for(const std::filesystem::path& header_path);
Cube load_cube(const std::filesystem::path& header_path);
void save_cube(const Cube& cube, const std::filesystem::path& header_path);

// Ground truth is plain text: one row per line, comma-separated base-10
// labels in 0..16.
GroundTruthMap load_ground_truth(const std::filesystem::path& path);
void save_ground_truth(const GroundTruthMap& gt,
                       const std::filesystem::path& path);

// Cube/GT pairing check; throws shape_mismatch.
void require_same_shape(const Cube& cube, const GroundTruthMap& gt);

}  // namespace hsiband
