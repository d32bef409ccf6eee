#include "hsiband/selection.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <utility>

#include "json.hpp"

namespace hsiband {

const char* to_string(RankingCriterion c) {
  return c == RankingCriterion::MutualInformation ? "mi" : "homogeneity";
}

RankingCriterion criterion_from_string(const std::string& s) {
  if (s == "mi") return RankingCriterion::MutualInformation;
  if (s == "homogeneity") return RankingCriterion::Homogeneity;
  fail(errc::parse_error, "unknown criterion '" + s + "'");
}

double estimate_gt_mi(const QuantizedBand& est, const GroundTruthMap& gt,
                      bool labeled_only) {
  if (est.rows != gt.rows || est.cols != gt.cols)
    fail(errc::shape_mismatch, "estimate and ground truth shapes differ");
  if (!labeled_only)
    return mutual_information(
        joint_histogram(est.values, gt.labels, est.levels, kGtLevels));

  std::vector<std::uint16_t> a, b;
  a.reserve(gt.labels.size());
  b.reserve(gt.labels.size());
  for (std::size_t p = 0; p < gt.labels.size(); ++p) {
    if (gt.labels[p] == 0) continue;
    a.push_back(est.values[p]);
    b.push_back(gt.labels[p]);
  }
  if (a.empty())
    fail(errc::no_labeled_pixels, "labeled-only MI with no labeled pixels");
  return mutual_information(joint_histogram(a, b, est.levels, kGtLevels));
}

Ranking rank_bands(const Cube& cube, const GroundTruthMap& gt,
                   const SelectionConfig& config) {
  require_same_shape(cube, gt);
  if (cube.bands < 1) fail(errc::empty_cube, "cube has no bands");

  Ranking r;
  r.scores.resize(cube.bands);
  for (int b = 0; b < cube.bands; ++b) {
    if (config.criterion == RankingCriterion::MutualInformation) {
      r.scores[b] = estimate_gt_mi(quantize_band(cube, b, config.levels), gt,
                                   config.labeled_only);
    } else {
      r.scores[b] = band_homogeneity(cube, b, config.glcm);
    }
  }
  r.ordering.resize(cube.bands);
  std::iota(r.ordering.begin(), r.ordering.end(), 0);
  std::sort(r.ordering.begin(), r.ordering.end(), [&](int x, int y) {
    if (r.scores[x] != r.scores[y]) return r.scores[x] > r.scores[y];
    return x < y;
  });
  return r;
}

GtEstimate update_estimate(const GtEstimate& est, const QuantizedBand& band) {
  if (est.rows != band.rows || est.cols != band.cols)
    fail(errc::shape_mismatch, "estimate and band shapes differ");
  if (est.levels != band.levels)
    fail(errc::level_mismatch, "estimate and band level counts differ");
  GtEstimate out = est;
  for (std::size_t p = 0; p < out.values.size(); ++p)
    out.values[p] = static_cast<std::uint16_t>(
        (static_cast<std::uint32_t>(est.values[p]) + band.values[p] + 1) / 2);
  return out;
}

SelectionReport greedy_select(const Cube& cube, const GroundTruthMap& gt,
                              const SelectionConfig& config) {
  require_same_shape(cube, gt);
  if (cube.bands < 1) fail(errc::empty_cube, "cube has no bands");
  if (config.max_bands && *config.max_bands < 1)
    fail(errc::invalid_spec, "max_bands must be >= 1");

  Ranking ranking = rank_bands(cube, gt, config);

  SelectionReport rep;
  rep.config = config;
  rep.ordering = std::move(ranking.ordering);
  rep.scores = std::move(ranking.scores);

  // The top-ranked band seeds the estimate unconditionally; its trace
  // entry carries mi_before = 0 (no estimate exists yet).
  const int first = rep.ordering.front();
  GtEstimate est = quantize_band(cube, first, config.levels);
  double mi_cur = estimate_gt_mi(est, gt, config.labeled_only);
  rep.selected.push_back(first);
  rep.trace.push_back({first, 0.0, mi_cur, true});
  rep.final_mi = mi_cur;

  const std::size_t cap =
      config.max_bands ? static_cast<std::size_t>(*config.max_bands)
                       : static_cast<std::size_t>(cube.bands);
  for (std::size_t k = 1;
       k < rep.ordering.size() && rep.selected.size() < cap; ++k) {
    const int b = rep.ordering[k];
    GtEstimate cand = update_estimate(est, quantize_band(cube, b, config.levels));
    const double mi_new = estimate_gt_mi(cand, gt, config.labeled_only);
    const bool accepted = (mi_new - mi_cur) > config.threshold;
    rep.trace.push_back({b, mi_cur, mi_new, accepted});
    if (accepted) {
      est = std::move(cand);
      mi_cur = mi_new;
      rep.selected.push_back(b);
      rep.final_mi = mi_cur;
    }
  }
  return rep;
}

std::string report_to_json(const SelectionReport& report) {
  using json = nlohmann::ordered_json;
  json j;
  j["criterion"] = to_string(report.config.criterion);
  j["threshold"] = report.config.threshold;
  j["levels"] = report.config.levels;
  j["glcm"] = json{{"levels", report.config.glcm.levels},
                   {"offset", json::array({report.config.glcm.drow,
                                           report.config.glcm.dcol})},
                   {"symmetric", report.config.glcm.symmetric}};
  j["labeled_only"] = report.config.labeled_only;
  j["ordering"] = report.ordering;
  j["scores"] = report.scores;
  json trace = json::array();
  for (const auto& t : report.trace) {
    trace.push_back(json{{"band", t.band},
                         {"mi_before", t.mi_before},
                         {"mi_after", t.mi_after},
                         {"accepted", t.accepted}});
  }
  j["trace"] = std::move(trace);
  j["selected"] = report.selected;
  j["final_mi"] = report.final_mi;
  return j.dump(2) + "\n";
}

void save_report(const SelectionReport& report,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(errc::missing_file, "cannot write " + path.string());
  out << report_to_json(report);
}

}  // namespace hsiband
