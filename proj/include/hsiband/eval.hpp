#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "hsiband/cube.hpp"
#include "hsiband/selection.hpp"

namespace hsiband {

// Per-class random partition of labeled pixels; label-0 pixels belong to
// neither side. Pixel ids are row-major flat indices r * cols + c.
struct SplitAssignment {
  std::vector<int> train;
  std::vector<int> test;
  std::uint64_t seed = 0;
  double fraction = 0.5;
};

// Shuffles each class with a seeded generator and sends the first
// ceil(fraction * n) pixels to train. Index lists come back sorted.
SplitAssignment stratified_split(const GroundTruthMap& gt, double fraction,
                                 std::uint64_t seed);

// Deterministic 1-nearest-neighbor on raw spectral vectors restricted to
// the subset bands, Euclidean distance, ties broken by lowest training
// pixel index. Returns predicted labels for split.test in order.
std::vector<std::uint16_t> classify_1nn(const Cube& cube,
                                        std::span<const int> subset,
                                        const SplitAssignment& split,
                                        const GroundTruthMap& gt);

double overall_accuracy(std::span<const std::uint16_t> predictions,
                        std::span<const std::uint16_t> truth);

struct EvaluationResult {
  std::vector<int> subset;
  int n_bands = 0;
  double accuracy_percent = 0.0;
  std::string classifier = "1nn";
  std::uint64_t seed = 0;
};

EvaluationResult evaluate_subset(const Cube& cube, const GroundTruthMap& gt,
                                 std::span<const int> subset,
                                 const SplitAssignment& split);

struct SweepRow {
  double threshold = 0.0;
  int n_bands = 0;
  std::vector<int> bands;
  double accuracy_percent = 0.0;
};

// One selection run per threshold, then one evaluation per prefix of the
// accepted list (one row per acceptance step). Rows come out grouped by
// threshold in input order, prefix size ascending.
std::vector<SweepRow> sweep(const Cube& cube, const GroundTruthMap& gt,
                            std::span<const double> thresholds,
                            const SelectionConfig& base,
                            const SplitAssignment& split);

// CSV with header threshold,n_bands,bands,accuracy_percent; band lists
// are ';'-joined.
std::string sweep_csv(std::span<const SweepRow> rows);

// Sparse `label index:value` lines (1-based ascending feature indices,
// integer values) for external classifier tools; one train and one test
// file per the split.
void export_classifier_files(const Cube& cube, std::span<const int> subset,
                             const SplitAssignment& split,
                             const GroundTruthMap& gt,
                             const std::filesystem::path& train_path,
                             const std::filesystem::path& test_path);

inline constexpr std::array<double, 6> kDefaultSweepThresholds{
    0.0, -0.0035, -0.004, -0.005, -0.01, -0.02};

}  // namespace hsiband
