#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "hsiband/eval.hpp"
#include "hsiband/synthetic.hpp"
#include "test_util.hpp"

using namespace hsiband;
using testutil::TempDir;
using testutil::thrown_errc;

namespace {

SyntheticData planted(std::uint64_t seed, double sigma = 0.0) {
  SyntheticSpec spec;
  spec.rows = 12;
  spec.cols = 12;
  spec.n_classes = 4;
  spec.n_signal = 2;
  spec.n_noise = 2;
  spec.n_redundant = 1;
  spec.noise_sigma = sigma;
  spec.seed = seed;
  return generate_synthetic(spec);
}

}  // namespace

TEST_CASE("stratified split honors the ceil rule per class") {
  // class 1: pixels {0,1}; class 2: pixels {2,3,4}; pixel 5 unlabeled
  const GroundTruthMap gt(1, 6, {1, 1, 2, 2, 2, 0});
  const SplitAssignment split = stratified_split(gt, 0.5, 7);

  CHECK(split.train.size() == 3);  // 1 + 2
  CHECK(split.test.size() == 2);   // 1 + 1
  CHECK(split.seed == 7);
  CHECK(split.fraction == 0.5);

  std::set<int> train(split.train.begin(), split.train.end());
  std::set<int> test(split.test.begin(), split.test.end());
  CHECK(train.size() == split.train.size());
  for (const int t : test) CHECK(train.count(t) == 0);  // disjoint

  std::set<int> all = train;
  all.insert(test.begin(), test.end());
  CHECK(all == std::set<int>{0, 1, 2, 3, 4});  // labeled pixels only

  CHECK(std::is_sorted(split.train.begin(), split.train.end()));
  CHECK(std::is_sorted(split.test.begin(), split.test.end()));

  // per-class counts
  const auto count_class = [&](const std::vector<int>& v, int lo, int hi) {
    return std::count_if(v.begin(), v.end(),
                         [&](int p) { return p >= lo && p <= hi; });
  };
  CHECK(count_class(split.train, 0, 1) == 1);
  CHECK(count_class(split.train, 2, 4) == 2);
}

TEST_CASE("stratified split determinism and guards") {
  const GroundTruthMap gt(2, 4, {1, 1, 1, 2, 2, 2, 2, 0});
  const SplitAssignment a = stratified_split(gt, 0.5, 123);
  const SplitAssignment b = stratified_split(gt, 0.5, 123);
  CHECK(a.train == b.train);
  CHECK(a.test == b.test);

  CHECK(thrown_errc([&] { stratified_split(gt, 0.0, 1); }) ==
        errc::invalid_fraction);
  CHECK(thrown_errc([&] { stratified_split(gt, 1.0, 1); }) ==
        errc::invalid_fraction);
  const GroundTruthMap unlabeled(1, 3, {0, 0, 0});
  CHECK(thrown_errc([&] { stratified_split(unlabeled, 0.5, 1); }) ==
        errc::no_labeled_pixels);
}

TEST_CASE("1nn assigns the label of the nearest training pixel") {
  // One band, three pixels in a row: 5, 9, 7.
  const Cube cube(1, 1, 3, {5, 9, 7});
  const GroundTruthMap gt(1, 3, {1, 2, 1});

  SplitAssignment split;
  split.train = {0, 1};
  split.test = {2};

  SUBCASE("equidistant tie goes to the lower train index") {
    // |7-5| = |7-9| = 2: both neighbors tie, pixel 0 wins.
    const auto pred = classify_1nn(cube, std::vector<int>{0}, split, gt);
    REQUIRE(pred.size() == 1);
    CHECK(pred[0] == 1);
  }
  SUBCASE("exact spectral match wins") {
    const Cube exact(1, 1, 3, {5, 7, 7});
    const auto pred = classify_1nn(exact, std::vector<int>{0}, split, gt);
    CHECK(pred[0] == 2);
  }
  SUBCASE("guards") {
    CHECK(thrown_errc([&] {
            classify_1nn(cube, std::vector<int>{}, split, gt);
          }) == errc::empty_subset);
    CHECK(thrown_errc([&] {
            classify_1nn(cube, std::vector<int>{1}, split, gt);
          }) == errc::invalid_spec);
    SplitAssignment empty;
    empty.test = {2};
    CHECK(thrown_errc([&] {
            classify_1nn(cube, std::vector<int>{0}, empty, gt);
          }) == errc::empty_train_set);
  }
}

TEST_CASE("noiseless planted cube classifies perfectly on signal bands") {
  const SyntheticData d = planted(3);
  const SplitAssignment split = stratified_split(d.gt, 0.5, 9);
  const auto res =
      evaluate_subset(d.cube, d.gt, std::vector<int>{0, 1}, split);
  CHECK(res.accuracy_percent == 100.0);
  CHECK(res.n_bands == 2);
  CHECK(res.classifier == "1nn");
  CHECK(res.seed == 9);
}

TEST_CASE("overall accuracy") {
  using U16 = std::vector<std::uint16_t>;
  CHECK(overall_accuracy(U16{1, 2, 3, 4}, U16{1, 2, 3, 5}) == 75.0);
  CHECK(overall_accuracy(U16{1, 2}, U16{1, 2}) == 100.0);
  CHECK(overall_accuracy(U16{1, 2}, U16{3, 4}) == 0.0);
  CHECK(thrown_errc([&] { overall_accuracy(U16{}, U16{}); }) ==
        errc::empty_input);
  CHECK(thrown_errc([&] { overall_accuracy(U16{1}, U16{1, 2}); }) ==
        errc::length_mismatch);
}

TEST_CASE("evaluation is deterministic and order-insensitive in the subset") {
  const SyntheticData d = planted(5, 1500.0);
  const SplitAssignment split = stratified_split(d.gt, 0.5, 2);

  const auto r1 = evaluate_subset(d.cube, d.gt, std::vector<int>{0, 1}, split);
  const auto r2 = evaluate_subset(d.cube, d.gt, std::vector<int>{0, 1}, split);
  const auto r3 = evaluate_subset(d.cube, d.gt, std::vector<int>{1, 0}, split);
  CHECK(r1.accuracy_percent == r2.accuracy_percent);
  CHECK(r1.accuracy_percent == r3.accuracy_percent);
}

TEST_CASE("signal subset beats noise subset on the planted cube") {
  const SyntheticData d = planted(11, 2000.0);
  const SplitAssignment split = stratified_split(d.gt, 0.5, 4);
  const auto signal =
      evaluate_subset(d.cube, d.gt, std::vector<int>{0, 1}, split);
  const auto noise =
      evaluate_subset(d.cube, d.gt, std::vector<int>{2, 3}, split);
  CHECK(signal.accuracy_percent > noise.accuracy_percent);
}

TEST_CASE("sweep emits per-acceptance prefixes grouped by threshold") {
  // All-duplicates cube: redundancy is the only signal.
  SyntheticSpec spec;
  spec.rows = 8;
  spec.cols = 8;
  spec.n_classes = 4;
  spec.n_signal = 1;
  spec.n_redundant = 3;
  spec.seed = 21;
  const SyntheticData d = generate_synthetic(spec);
  const SplitAssignment split = stratified_split(d.gt, 0.5, 1);

  SelectionConfig base;
  const std::vector<double> thresholds{0.0, -0.01};
  const auto rows = sweep(d.cube, d.gt, thresholds, base, split);

  // Th=0: only the seed band survives -> 1 row. Th=-0.01: all 4 bands
  // accepted -> 4 prefix rows.
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].threshold == 0.0);
  CHECK(rows[0].n_bands == 1);
  CHECK(rows[0].bands == std::vector<int>{0});
  for (int k = 0; k < 4; ++k) {
    CHECK(rows[1 + k].threshold == -0.01);
    CHECK(rows[1 + k].n_bands == k + 1);
    CHECK(rows[1 + k].bands.size() == static_cast<std::size_t>(k + 1));
  }
  CHECK(rows[4].bands == std::vector<int>{0, 1, 2, 3});

  CHECK(thrown_errc([&] {
          sweep(d.cube, d.gt, std::vector<double>{}, base, split);
        }) == errc::empty_input);
}

TEST_CASE("sweep csv format") {
  std::vector<SweepRow> rows;
  rows.push_back({0.0, 1, {4}, 100.0});
  rows.push_back({-0.0035, 2, {4, 7}, 87.5});
  const std::string csv = sweep_csv(rows);
  CHECK(csv ==
        "threshold,n_bands,bands,accuracy_percent\n"
        "0,1,4,100\n"
        "-0.0035,2,4;7,87.5\n");
}

TEST_CASE("classifier export writes sparse label index:value lines") {
  TempDir dir;
  const Cube cube(2, 1, 3, {7, 8, 9, 70, 80, 90});
  const GroundTruthMap gt(1, 3, {1, 2, 1});
  SplitAssignment split;
  split.train = {0, 2};
  split.test = {1};

  export_classifier_files(cube, std::vector<int>{1, 0}, split, gt,
                          dir.file("train.txt"), dir.file("test.txt"));
  CHECK(testutil::read_file(dir.file("train.txt")) ==
        "1 1:70 2:7\n"
        "1 1:90 2:9\n");
  CHECK(testutil::read_file(dir.file("test.txt")) == "2 1:80 2:8\n");
}
