#include "hsiband/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <random>

#include "hsiband/rng.hpp"

namespace hsiband {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void check_subset(const Cube& cube, std::span<const int> subset) {
  if (subset.empty()) fail(errc::empty_subset, "band subset is empty");
  for (const int b : subset) {
    if (b < 0 || b >= cube.bands)
      fail(errc::invalid_spec,
           "band index " + std::to_string(b) + " outside cube");
  }
}

}  // namespace

SplitAssignment stratified_split(const GroundTruthMap& gt, double fraction,
                                 std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction < 1.0))
    fail(errc::invalid_fraction, "split fraction must be in (0, 1)");

  std::vector<std::vector<int>> by_class(kMaxLabel + 1);
  for (std::size_t p = 0; p < gt.labels.size(); ++p) {
    const auto label = gt.labels[p];
    if (label != 0) by_class[label].push_back(static_cast<int>(p));
  }

  SplitAssignment split;
  split.seed = seed;
  split.fraction = fraction;
  std::mt19937_64 gen(seed);
  bool any = false;
  for (int c = 1; c <= kMaxLabel; ++c) {
    auto& pixels = by_class[c];
    if (pixels.empty()) continue;
    any = true;
    rng::shuffle(pixels, gen);
    const auto n_train = static_cast<std::size_t>(
        std::ceil(fraction * static_cast<double>(pixels.size())));
    split.train.insert(split.train.end(), pixels.begin(),
                       pixels.begin() + n_train);
    split.test.insert(split.test.end(), pixels.begin() + n_train,
                      pixels.end());
  }
  if (!any) fail(errc::no_labeled_pixels, "ground truth has no labeled pixels");
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

std::vector<std::uint16_t> classify_1nn(const Cube& cube,
                                        std::span<const int> subset,
                                        const SplitAssignment& split,
                                        const GroundTruthMap& gt) {
  check_subset(cube, subset);
  if (split.train.empty()) fail(errc::empty_train_set, "train set is empty");
  require_same_shape(cube, gt);

  const std::size_t npix = cube.pixels_per_band();
  std::vector<std::uint16_t> predictions;
  predictions.reserve(split.test.size());

  for (const int t : split.test) {
    std::uint64_t best_dist = std::numeric_limits<std::uint64_t>::max();
    int best_idx = -1;
    for (const int tr : split.train) {
      std::uint64_t dist = 0;
      for (const int b : subset) {
        const std::size_t off = static_cast<std::size_t>(b) * npix;
        const std::int64_t d =
            static_cast<std::int64_t>(cube.samples[off + t]) -
            static_cast<std::int64_t>(cube.samples[off + tr]);
        dist += static_cast<std::uint64_t>(d * d);
        if (dist > best_dist) break;
      }
      if (dist < best_dist || (dist == best_dist && tr < best_idx)) {
        best_dist = dist;
        best_idx = tr;
      }
    }
    predictions.push_back(gt.labels[best_idx]);
  }
  return predictions;
}

double overall_accuracy(std::span<const std::uint16_t> predictions,
                        std::span<const std::uint16_t> truth) {
  if (predictions.size() != truth.size())
    fail(errc::length_mismatch, "prediction / truth lengths differ");
  if (predictions.empty()) fail(errc::empty_input, "no predictions to score");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < predictions.size(); ++i)
    if (predictions[i] == truth[i]) ++correct;
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(predictions.size());
}

EvaluationResult evaluate_subset(const Cube& cube, const GroundTruthMap& gt,
                                 std::span<const int> subset,
                                 const SplitAssignment& split) {
  const auto predictions = classify_1nn(cube, subset, split, gt);
  std::vector<std::uint16_t> truth;
  truth.reserve(split.test.size());
  for (const int t : split.test) truth.push_back(gt.labels[t]);

  EvaluationResult res;
  res.subset.assign(subset.begin(), subset.end());
  res.n_bands = static_cast<int>(subset.size());
  res.accuracy_percent = overall_accuracy(predictions, truth);
  res.classifier = "1nn";
  res.seed = split.seed;
  return res;
}

std::vector<SweepRow> sweep(const Cube& cube, const GroundTruthMap& gt,
                            std::span<const double> thresholds,
                            const SelectionConfig& base,
                            const SplitAssignment& split) {
  if (thresholds.empty()) fail(errc::empty_input, "no thresholds to sweep");

  std::vector<SweepRow> rows;
  for (const double th : thresholds) {
    SelectionConfig config = base;
    config.threshold = th;
    const SelectionReport rep = greedy_select(cube, gt, config);
    for (std::size_t k = 1; k <= rep.selected.size(); ++k) {
      std::vector<int> prefix(rep.selected.begin(), rep.selected.begin() + k);
      const auto res = evaluate_subset(cube, gt, prefix, split);
      rows.push_back({th, static_cast<int>(k), std::move(prefix),
                      res.accuracy_percent});
    }
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "threshold,n_bands,bands,accuracy_percent\n";
  for (const auto& row : rows) {
    out += fmt_double(row.threshold);
    out += ',';
    out += std::to_string(row.n_bands);
    out += ',';
    for (std::size_t i = 0; i < row.bands.size(); ++i) {
      if (i) out += ';';
      out += std::to_string(row.bands[i]);
    }
    out += ',';
    out += fmt_double(row.accuracy_percent);
    out += '\n';
  }
  return out;
}

void export_classifier_files(const Cube& cube, std::span<const int> subset,
                             const SplitAssignment& split,
                             const GroundTruthMap& gt,
                             const std::filesystem::path& train_path,
                             const std::filesystem::path& test_path) {
  check_subset(cube, subset);
  require_same_shape(cube, gt);

  const std::size_t npix = cube.pixels_per_band();
  const auto write_rows = [&](const std::vector<int>& pixels,
                              const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) fail(errc::missing_file, "cannot write " + path.string());
    for (const int p : pixels) {
      out << gt.labels[p];
      for (std::size_t f = 0; f < subset.size(); ++f) {
        const std::size_t off = static_cast<std::size_t>(subset[f]) * npix;
        out << ' ' << (f + 1) << ':' << cube.samples[off + p];
      }
      out << '\n';
    }
  };
  write_rows(split.train, train_path);
  write_rows(split.test, test_path);
}

}  // namespace hsiband
