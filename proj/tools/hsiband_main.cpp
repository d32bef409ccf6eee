// Command-line front end: synthesize test cubes, inspect per-band
// statistics, run greedy band selection, and sweep redundancy thresholds.
// Every run writes a manifest JSON next to its outputs so results can be
// traced back to exact inputs and flags.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsiband/cube.hpp"
#include "hsiband/eval.hpp"
#include "hsiband/glcm.hpp"
#include "hsiband/selection.hpp"
#include "hsiband/synthetic.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// FNV-1a over the file bytes; cheap content fingerprint for manifests.
std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    hsiband::fail(hsiband::errc::missing_file,
                  "cannot open " + path.string());
  std::uint64_t h = 14695981039346656037ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void write_manifest(const std::string& command, const json& parameters,
                    const std::vector<std::filesystem::path>& inputs,
                    const std::vector<std::filesystem::path>& outputs,
                    std::uint64_t seed,
                    const std::filesystem::path& manifest_path) {
  json m;
  m["command"] = command;
  m["parameters"] = parameters;
  json ins = json::array();
  for (const auto& p : inputs)
    ins.push_back(json{{"path", p.string()}, {"fnv1a64", file_digest(p)}});
  m["inputs"] = std::move(ins);
  json outs = json::array();
  for (const auto& p : outputs) outs.push_back(p.string());
  outs.push_back(manifest_path.string());
  m["outputs"] = std::move(outs);
  m["seed"] = seed;

  std::ofstream out(manifest_path);
  if (!out)
    hsiband::fail(hsiband::errc::missing_file,
                  "cannot write " + manifest_path.string());
  out << m.dump(2) << "\n";
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path);
  if (!out)
    hsiband::fail(hsiband::errc::missing_file, "cannot write " + path.string());
  out << content;
}

struct InspectArgs {
  std::string cube, gt, out;
};

int run_inspect(const InspectArgs& a) {
  const hsiband::Cube cube = hsiband::load_cube(a.cube);
  const hsiband::GroundTruthMap gt = hsiband::load_ground_truth(a.gt);
  hsiband::require_same_shape(cube, gt);

  const hsiband::GlcmParams glcm_params{};
  std::string csv = "band,mi_bits,homogeneity\n";
  for (int b = 0; b < cube.bands; ++b) {
    const double mi = hsiband::estimate_gt_mi(
        hsiband::quantize_band(cube, b, 17), gt, false);
    const double hom = hsiband::band_homogeneity(cube, b, glcm_params);
    csv += std::to_string(b) + "," + fmt_double(mi) + "," + fmt_double(hom) +
           "\n";
  }
  write_text_file(a.out, csv);

  write_manifest("inspect",
                 json{{"cube", a.cube}, {"gt", a.gt}, {"out", a.out}},
                 {a.cube, hsiband::raw_path_for(a.cube), a.gt}, {a.out}, 0,
                 a.out + ".manifest.json");
  return 0;
}

struct SelectArgs {
  std::string cube, gt, criterion, out;
  double threshold = 0.0;
  std::optional<int> max_bands;
};

int run_select(const SelectArgs& a) {
  const hsiband::Cube cube = hsiband::load_cube(a.cube);
  const hsiband::GroundTruthMap gt = hsiband::load_ground_truth(a.gt);

  hsiband::SelectionConfig config;
  config.criterion = hsiband::criterion_from_string(a.criterion);
  config.threshold = a.threshold;
  config.max_bands = a.max_bands;
  const hsiband::SelectionReport report =
      hsiband::greedy_select(cube, gt, config);
  hsiband::save_report(report, a.out);

  json params{{"cube", a.cube},
              {"gt", a.gt},
              {"criterion", a.criterion},
              {"threshold", a.threshold},
              {"out", a.out}};
  params["max_bands"] = a.max_bands ? json(*a.max_bands) : json(nullptr);
  write_manifest("select", params,
                 {a.cube, hsiband::raw_path_for(a.cube), a.gt}, {a.out}, 0,
                 a.out + ".manifest.json");
  return 0;
}

struct SweepArgs {
  std::string cube, gt, criterion, out;
  std::vector<double> thresholds;
  std::uint64_t seed = 0;
};

int run_sweep(const SweepArgs& a) {
  const hsiband::Cube cube = hsiband::load_cube(a.cube);
  const hsiband::GroundTruthMap gt = hsiband::load_ground_truth(a.gt);

  hsiband::SelectionConfig config;
  config.criterion = hsiband::criterion_from_string(a.criterion);
  const hsiband::SplitAssignment split =
      hsiband::stratified_split(gt, 0.5, a.seed);
  const auto rows = hsiband::sweep(cube, gt, a.thresholds, config, split);
  write_text_file(a.out, hsiband::sweep_csv(rows));

  json th = json::array();
  for (const double t : a.thresholds) th.push_back(t);
  write_manifest("sweep",
                 json{{"cube", a.cube},
                      {"gt", a.gt},
                      {"criterion", a.criterion},
                      {"thresholds", std::move(th)},
                      {"seed", a.seed},
                      {"out", a.out}},
                 {a.cube, hsiband::raw_path_for(a.cube), a.gt}, {a.out},
                 a.seed, a.out + ".manifest.json");
  return 0;
}

struct SynthArgs {
  int rows = 0, cols = 0, classes = 0, signal = 0, noise = 0, redundant = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::string out_prefix;
};

int run_synth(const SynthArgs& a) {
  hsiband::SyntheticSpec spec;
  spec.rows = a.rows;
  spec.cols = a.cols;
  spec.n_classes = a.classes;
  spec.n_signal = a.signal;
  spec.n_noise = a.noise;
  spec.n_redundant = a.redundant;
  spec.noise_sigma = a.sigma;
  spec.seed = a.seed;
  const hsiband::SyntheticData data = hsiband::generate_synthetic(spec);

  const std::string hdr = a.out_prefix + ".hdr";
  const std::string raw = a.out_prefix + ".raw";
  const std::string gt = a.out_prefix + "_gt.txt";
  hsiband::save_cube(data.cube, hdr);
  hsiband::save_ground_truth(data.gt, gt);

  write_manifest("synth",
                 json{{"rows", a.rows},
                      {"cols", a.cols},
                      {"classes", a.classes},
                      {"signal", a.signal},
                      {"noise", a.noise},
                      {"redundant", a.redundant},
                      {"sigma", a.sigma},
                      {"seed", a.seed},
                      {"out_prefix", a.out_prefix}},
                 {}, {hdr, raw, gt}, a.seed, a.out_prefix + ".manifest.json");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperspectral band selection toolkit"};
  app.require_subcommand(1);

  InspectArgs inspect_args;
  auto* inspect = app.add_subcommand(
      "inspect", "per-band MI and homogeneity as CSV");
  inspect->add_option("--cube", inspect_args.cube, "cube header file")
      ->required();
  inspect->add_option("--gt", inspect_args.gt, "ground truth file")
      ->required();
  inspect->add_option("--out", inspect_args.out, "output CSV path")
      ->required();

  SelectArgs select_args;
  auto* select =
      app.add_subcommand("select", "greedy band selection, report as JSON");
  select->add_option("--cube", select_args.cube, "cube header file")
      ->required();
  select->add_option("--gt", select_args.gt, "ground truth file")->required();
  select
      ->add_option("--criterion", select_args.criterion,
                   "ranking criterion: mi | homogeneity")
      ->required()
      ->check(CLI::IsMember({"mi", "homogeneity"}));
  select
      ->add_option("--threshold", select_args.threshold,
                   "redundancy threshold in bits (accept iff gain > Th)")
      ->required();
  int max_bands_flag = 0;
  auto* max_bands_opt = select->add_option(
      "--max-bands", max_bands_flag, "stop after this many accepted bands");
  select->add_option("--out", select_args.out, "output report path")
      ->required();

  SweepArgs sweep_args;
  sweep_args.thresholds.assign(hsiband::kDefaultSweepThresholds.begin(),
                               hsiband::kDefaultSweepThresholds.end());
  auto* sweep = app.add_subcommand(
      "sweep", "selection + accuracy across thresholds, CSV table");
  sweep->add_option("--cube", sweep_args.cube, "cube header file")->required();
  sweep->add_option("--gt", sweep_args.gt, "ground truth file")->required();
  sweep
      ->add_option("--criterion", sweep_args.criterion,
                   "ranking criterion: mi | homogeneity")
      ->required()
      ->check(CLI::IsMember({"mi", "homogeneity"}));
  sweep
      ->add_option("--thresholds", sweep_args.thresholds,
                   "comma-separated threshold list")
      ->delimiter(',');
  sweep->add_option("--seed", sweep_args.seed, "train/test split seed");
  sweep->add_option("--out", sweep_args.out, "output CSV path")->required();

  SynthArgs synth_args;
  auto* synth =
      app.add_subcommand("synth", "generate a synthetic cube + ground truth");
  synth->add_option("--rows", synth_args.rows, "grid rows")->required();
  synth->add_option("--cols", synth_args.cols, "grid cols")->required();
  synth->add_option("--classes", synth_args.classes, "label classes (1..16)")
      ->required();
  synth->add_option("--signal", synth_args.signal, "signal band count")
      ->required();
  synth->add_option("--noise", synth_args.noise, "pure-noise band count");
  synth->add_option("--redundant", synth_args.redundant,
                    "duplicate band count");
  synth->add_option("--sigma", synth_args.sigma,
                    "noise stddev on signal bands");
  synth->add_option("--seed", synth_args.seed, "generator seed");
  synth->add_option("--out-prefix", synth_args.out_prefix,
                    "output path prefix")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (inspect->parsed()) return run_inspect(inspect_args);
    if (select->parsed()) {
      if (max_bands_opt->count()) select_args.max_bands = max_bands_flag;
      return run_select(select_args);
    }
    if (sweep->parsed()) return run_sweep(sweep_args);
    if (synth->parsed()) return run_synth(synth_args);
  } catch (const hsiband::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
