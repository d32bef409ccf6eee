#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hsiband/cube.hpp"
#include "hsiband/glcm.hpp"
#include "hsiband/info_metrics.hpp"
#include "hsiband/quantize.hpp"

namespace hsiband {

// Which per-band statistic orders the candidate list. Either way the
// accept/reject decision is driven by the MI gain of the running
// ground-truth estimate.
enum class RankingCriterion { MutualInformation, Homogeneity };

const char* to_string(RankingCriterion c);  // "mi" / "homogeneity"
RankingCriterion criterion_from_string(const std::string& s);

struct SelectionConfig {
  RankingCriterion criterion = RankingCriterion::MutualInformation;
  double threshold = 0.0;  // bits; accept iff MI gain > threshold
  int levels = 17;         // quantization alphabet for MI estimation
  GlcmParams glcm{};       // used by the homogeneity criterion
  std::optional<int> max_bands{};
  bool labeled_only = false;  // restrict MI to pixels with label != 0
};

// The running GT approximation is itself a quantized raster.
using GtEstimate = QuantizedBand;

struct TraceEntry {
  int band = 0;
  double mi_before = 0.0;
  double mi_after = 0.0;
  bool accepted = false;
};

struct Ranking {
  std::vector<int> ordering;   // band indices, best score first
  std::vector<double> scores;  // indexed by band
};

struct SelectionReport {
  SelectionConfig config;
  std::vector<int> ordering;
  std::vector<double> scores;
  std::vector<TraceEntry> trace;
  std::vector<int> selected;  // in acceptance order
  double final_mi = 0.0;
};

// MI in bits between a quantized raster and the label map.
double estimate_gt_mi(const QuantizedBand& est, const GroundTruthMap& gt,
                      bool labeled_only = false);

// Scores every band by the configured criterion and orders descending,
// ties broken by ascending band index.
Ranking rank_bands(const Cube& cube, const GroundTruthMap& gt,
                   const SelectionConfig& config);

// Pixelwise mean of estimate and band, rounded half up.
GtEstimate update_estimate(const GtEstimate& est, const QuantizedBand& band);

// Single forward pass over the ranked bands. The top-ranked band seeds
// the estimate (trace entry with mi_before = 0); each later band is
// merged into a candidate estimate and kept iff the MI gain exceeds the
// threshold. Rejected bands never touch the estimate.
SelectionReport greedy_select(const Cube& cube, const GroundTruthMap& gt,
                              const SelectionConfig& config);

// JSON document with fields: criterion, threshold, levels,
// glcm{levels,offset,symmetric}, labeled_only, ordering, scores, trace,
// selected, final_mi. Stable field order; identical reports serialize
// to identical bytes.
std::string report_to_json(const SelectionReport& report);
void save_report(const SelectionReport& report,
                 const std::filesystem::path& path);

}  // namespace hsiband
