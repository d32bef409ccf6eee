#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hsiband/cube.hpp"
#include "hsiband/eval.hpp"
#include "hsiband/glcm.hpp"
#include "hsiband/info_metrics.hpp"
#include "hsiband/quantize.hpp"
#include "hsiband/selection.hpp"
#include "hsiband/synthetic.hpp"

namespace py = pybind11;
using namespace hsiband;

namespace {

using U16Array =
    py::array_t<std::uint16_t, py::array::c_style | py::array::forcecast>;

std::vector<std::uint16_t> to_vector(const U16Array& a) {
  std::vector<std::uint16_t> v(static_cast<std::size_t>(a.size()));
  std::copy_n(a.data(), a.size(), v.begin());
  return v;
}

py::array_t<std::uint16_t> grid_array(const std::vector<std::uint16_t>& v,
                                      int rows, int cols) {
  py::array_t<std::uint16_t> out({rows, cols});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

}  // namespace

PYBIND11_MODULE(_hsiband, m) {
  m.doc() = "hyperspectral band selection core";

  py::register_exception<Error>(m, "Error");

  py::class_<Cube>(m, "Cube")
      .def(py::init([](const U16Array& samples) {
             if (samples.ndim() != 3)
               throw py::value_error("expected a (bands, rows, cols) array");
             return Cube(static_cast<int>(samples.shape(0)),
                         static_cast<int>(samples.shape(1)),
                         static_cast<int>(samples.shape(2)),
                         to_vector(samples));
           }),
           py::arg("samples"))
      .def_readonly("bands", &Cube::bands)
      .def_readonly("rows", &Cube::rows)
      .def_readonly("cols", &Cube::cols)
      .def("band",
           [](const Cube& c, int b) {
             const auto s = c.band(b);
             py::array_t<std::uint16_t> out({c.rows, c.cols});
             std::copy(s.begin(), s.end(), out.mutable_data());
             return out;
           },
           py::arg("band"))
      .def("to_numpy", [](const Cube& c) {
        py::array_t<std::uint16_t> out({c.bands, c.rows, c.cols});
        std::copy(c.samples.begin(), c.samples.end(), out.mutable_data());
        return out;
      });

  py::class_<GroundTruthMap>(m, "GroundTruthMap")
      .def(py::init([](const U16Array& labels) {
             if (labels.ndim() != 2)
               throw py::value_error("expected a (rows, cols) array");
             return GroundTruthMap(static_cast<int>(labels.shape(0)),
                                   static_cast<int>(labels.shape(1)),
                                   to_vector(labels));
           }),
           py::arg("labels"))
      .def_readonly("rows", &GroundTruthMap::rows)
      .def_readonly("cols", &GroundTruthMap::cols)
      .def("to_numpy", [](const GroundTruthMap& g) {
        return grid_array(g.labels, g.rows, g.cols);
      });

  py::class_<QuantizedBand>(m, "QuantizedBand")
      .def(py::init([](const U16Array& values, int levels) {
             if (values.ndim() != 2)
               throw py::value_error("expected a (rows, cols) array");
             return QuantizedBand{static_cast<int>(values.shape(0)),
                                  static_cast<int>(values.shape(1)), levels,
                                  to_vector(values)};
           }),
           py::arg("values"), py::arg("levels"))
      .def_readonly("rows", &QuantizedBand::rows)
      .def_readonly("cols", &QuantizedBand::cols)
      .def_readonly("levels", &QuantizedBand::levels)
      .def("to_numpy", [](const QuantizedBand& q) {
        return grid_array(q.values, q.rows, q.cols);
      });

  py::class_<SyntheticSpec>(m, "SyntheticSpec")
      .def(py::init<>())
      .def_readwrite("rows", &SyntheticSpec::rows)
      .def_readwrite("cols", &SyntheticSpec::cols)
      .def_readwrite("n_classes", &SyntheticSpec::n_classes)
      .def_readwrite("n_signal", &SyntheticSpec::n_signal)
      .def_readwrite("n_noise", &SyntheticSpec::n_noise)
      .def_readwrite("n_redundant", &SyntheticSpec::n_redundant)
      .def_readwrite("noise_sigma", &SyntheticSpec::noise_sigma)
      .def_readwrite("seed", &SyntheticSpec::seed)
      .def("total_bands", &SyntheticSpec::total_bands);

  py::class_<SyntheticData>(m, "SyntheticData")
      .def_readonly("cube", &SyntheticData::cube)
      .def_readonly("gt", &SyntheticData::gt);

  py::class_<GlcmParams>(m, "GlcmParams")
      .def(py::init<>())
      .def_readwrite("levels", &GlcmParams::levels)
      .def_readwrite("drow", &GlcmParams::drow)
      .def_readwrite("dcol", &GlcmParams::dcol)
      .def_readwrite("symmetric", &GlcmParams::symmetric);

  py::enum_<RankingCriterion>(m, "RankingCriterion")
      .value("mi", RankingCriterion::MutualInformation)
      .value("homogeneity", RankingCriterion::Homogeneity);

  py::class_<SelectionConfig>(m, "SelectionConfig")
      .def(py::init<>())
      .def_readwrite("criterion", &SelectionConfig::criterion)
      .def_readwrite("threshold", &SelectionConfig::threshold)
      .def_readwrite("levels", &SelectionConfig::levels)
      .def_readwrite("glcm", &SelectionConfig::glcm)
      .def_readwrite("max_bands", &SelectionConfig::max_bands)
      .def_readwrite("labeled_only", &SelectionConfig::labeled_only);

  py::class_<TraceEntry>(m, "TraceEntry")
      .def_readonly("band", &TraceEntry::band)
      .def_readonly("mi_before", &TraceEntry::mi_before)
      .def_readonly("mi_after", &TraceEntry::mi_after)
      .def_readonly("accepted", &TraceEntry::accepted);

  py::class_<Ranking>(m, "Ranking")
      .def_readonly("ordering", &Ranking::ordering)
      .def_readonly("scores", &Ranking::scores);

  py::class_<SelectionReport>(m, "SelectionReport")
      .def_readonly("config", &SelectionReport::config)
      .def_readonly("ordering", &SelectionReport::ordering)
      .def_readonly("scores", &SelectionReport::scores)
      .def_readonly("trace", &SelectionReport::trace)
      .def_readonly("selected", &SelectionReport::selected)
      .def_readonly("final_mi", &SelectionReport::final_mi)
      .def("to_json",
           [](const SelectionReport& r) { return report_to_json(r); });

  py::class_<SplitAssignment>(m, "SplitAssignment")
      .def_readonly("train", &SplitAssignment::train)
      .def_readonly("test", &SplitAssignment::test)
      .def_readonly("seed", &SplitAssignment::seed)
      .def_readonly("fraction", &SplitAssignment::fraction);

  py::class_<EvaluationResult>(m, "EvaluationResult")
      .def_readonly("subset", &EvaluationResult::subset)
      .def_readonly("n_bands", &EvaluationResult::n_bands)
      .def_readonly("accuracy_percent", &EvaluationResult::accuracy_percent)
      .def_readonly("classifier", &EvaluationResult::classifier)
      .def_readonly("seed", &EvaluationResult::seed);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("threshold", &SweepRow::threshold)
      .def_readonly("n_bands", &SweepRow::n_bands)
      .def_readonly("bands", &SweepRow::bands)
      .def_readonly("accuracy_percent", &SweepRow::accuracy_percent);

  m.def("load_cube",
        [](const std::string& path) { return load_cube(path); },
        py::arg("header_path"));
  m.def("save_cube",
        [](const Cube& cube, const std::string& path) {
          save_cube(cube, path);
        },
        py::arg("cube"), py::arg("header_path"));
  m.def("load_ground_truth",
        [](const std::string& path) { return load_ground_truth(path); },
        py::arg("path"));
  m.def("save_ground_truth",
        [](const GroundTruthMap& gt, const std::string& path) {
          save_ground_truth(gt, path);
        },
        py::arg("gt"), py::arg("path"));

  m.def("generate_synthetic", &generate_synthetic, py::arg("spec"));

  m.def("quantize_band",
        [](const Cube& cube, int band, int levels) {
          return quantize_band(cube, band, levels);
        },
        py::arg("cube"), py::arg("band"), py::arg("levels") = kGtLevels);

  m.def("entropy",
        [](const U16Array& symbols, int levels) {
          const auto v = to_vector(symbols);
          return entropy(histogram(v, levels));
        },
        py::arg("symbols"), py::arg("levels"));
  m.def("mutual_information",
        [](const U16Array& a, const U16Array& b, int levels_a, int levels_b) {
          const auto va = to_vector(a);
          const auto vb = to_vector(b);
          return mutual_information(joint_histogram(va, vb, levels_a,
                                                    levels_b));
        },
        py::arg("a"), py::arg("b"), py::arg("levels_a"), py::arg("levels_b"));

  m.def("band_homogeneity",
        [](const Cube& cube, int band, const GlcmParams& params) {
          return band_homogeneity(cube, band, params);
        },
        py::arg("cube"), py::arg("band"), py::arg("params") = GlcmParams{});

  m.def("estimate_gt_mi", &estimate_gt_mi, py::arg("estimate"), py::arg("gt"),
        py::arg("labeled_only") = false);
  m.def("rank_bands", &rank_bands, py::arg("cube"), py::arg("gt"),
        py::arg("config"));
  m.def("update_estimate", &update_estimate, py::arg("estimate"),
        py::arg("band"));
  m.def("greedy_select", &greedy_select, py::arg("cube"), py::arg("gt"),
        py::arg("config"));

  m.def("stratified_split", &stratified_split, py::arg("gt"),
        py::arg("fraction"), py::arg("seed"));
  m.def("evaluate_subset",
        [](const Cube& cube, const GroundTruthMap& gt,
           const std::vector<int>& subset, const SplitAssignment& split) {
          return evaluate_subset(cube, gt, subset, split);
        },
        py::arg("cube"), py::arg("gt"), py::arg("subset"), py::arg("split"));
  m.def("sweep",
        [](const Cube& cube, const GroundTruthMap& gt,
           const std::vector<double>& thresholds, const SelectionConfig& base,
           const SplitAssignment& split) {
          return sweep(cube, gt, thresholds, base, split);
        },
        py::arg("cube"), py::arg("gt"), py::arg("thresholds"),
        py::arg("config"), py::arg("split"));
  m.def("sweep_csv",
        [](const std::vector<SweepRow>& rows) { return sweep_csv(rows); },
        py::arg("rows"));
  m.def("export_classifier_files",
        [](const Cube& cube, const std::vector<int>& subset,
           const SplitAssignment& split, const GroundTruthMap& gt,
           const std::string& train_path, const std::string& test_path) {
          export_classifier_files(cube, subset, split, gt, train_path,
                                  test_path);
        },
        py::arg("cube"), py::arg("subset"), py::arg("split"), py::arg("gt"),
        py::arg("train_path"), py::arg("test_path"));

  m.attr("DEFAULT_SWEEP_THRESHOLDS") =
      py::cast(std::vector<double>(kDefaultSweepThresholds.begin(),
                                   kDefaultSweepThresholds.end()));
  m.attr("MAX_LABEL") = kMaxLabel;
  m.attr("GT_LEVELS") = kGtLevels;
}
