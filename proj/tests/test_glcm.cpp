#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "hsiband/glcm.hpp"
#include "hsiband/rng.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hsiband;
using testutil::thrown_errc;

namespace {

QuantizedBand qband(int rows, int cols, int levels,
                    std::vector<std::uint16_t> values) {
  return QuantizedBand{rows, cols, levels, std::move(values)};
}

double prob_sum(const CooccurrenceMatrix& m) {
  double s = 0.0;
  for (const double p : m.probs) s += p;
  return s;
}

}  // namespace

TEST_CASE("glcm pair enumeration, asymmetric") {
  GlcmParams p;
  p.levels = 2;
  p.symmetric = false;

  // [[0,0],[1,1]]: horizontal pairs (0,0) and (1,1)
  const CooccurrenceMatrix m1 = glcm(qband(2, 2, 2, {0, 0, 1, 1}), p);
  CHECK(m1.at(0, 0) == 0.5);
  CHECK(m1.at(1, 1) == 0.5);
  CHECK(m1.at(0, 1) == 0.0);
  CHECK(m1.at(1, 0) == 0.0);

  // [[0,1],[0,1]]: both pairs are (0,1)
  const CooccurrenceMatrix m2 = glcm(qband(2, 2, 2, {0, 1, 0, 1}), p);
  CHECK(m2.at(0, 1) == 1.0);
  CHECK(m2.at(0, 0) == 0.0);
}

TEST_CASE("glcm symmetric mode equals its transpose exactly") {
  std::mt19937_64 g(21);
  GlcmParams p;  // defaults: levels 8, offset (0,1), symmetric
  for (int iter = 0; iter < 5; ++iter) {
    std::vector<std::uint16_t> vals(64);
    for (auto& v : vals)
      v = static_cast<std::uint16_t>(rng::bounded(g, 8));
    const CooccurrenceMatrix m = glcm(qband(8, 8, 8, vals), p);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) CHECK(m.at(i, j) == m.at(j, i));
    CHECK(std::abs(prob_sum(m) - 1.0) < 1e-12);
  }
}

TEST_CASE("glcm symmetric mode is offset-order invariant") {
  std::mt19937_64 g(22);
  std::vector<std::uint16_t> vals(64);
  for (auto& v : vals) v = static_cast<std::uint16_t>(rng::bounded(g, 8));
  const QuantizedBand img = qband(8, 8, 8, vals);

  for (const auto& [dr, dc] : {std::pair{0, 1}, {1, 0}, {1, 1}, {1, -1}}) {
    GlcmParams fwd;
    fwd.drow = dr;
    fwd.dcol = dc;
    GlcmParams rev;
    rev.drow = -dr;
    rev.dcol = -dc;
    const CooccurrenceMatrix a = glcm(img, fwd);
    const CooccurrenceMatrix b = glcm(img, rev);
    CHECK(a.probs == b.probs);
  }
}

TEST_CASE("glcm guards") {
  GlcmParams p;

  GlcmParams zero = p;
  zero.drow = zero.dcol = 0;
  CHECK(thrown_errc([&] { glcm(qband(2, 2, 8, {0, 0, 0, 0}), zero); }) ==
        errc::invalid_spec);

  GlcmParams one = p;
  one.levels = 1;
  CHECK(thrown_errc([&] { glcm(qband(2, 2, 8, {0, 0, 0, 0}), one); }) ==
        errc::invalid_levels);

  CHECK(thrown_errc([&] { glcm(qband(1, 1, 8, {0}), p); }) == errc::no_pairs);

  GlcmParams two = p;
  two.levels = 2;
  CHECK(thrown_errc([&] { glcm(qband(1, 2, 4, {0, 3}), two); }) ==
        errc::level_overflow);
}

TEST_CASE("homogeneity of explicit matrices") {
  CooccurrenceMatrix diag;
  diag.levels = 3;
  diag.probs = {0.25, 0, 0, 0, 0.5, 0, 0, 0, 0.25};
  CHECK(homogeneity(diag) == 1.0);

  CooccurrenceMatrix adjacent;
  adjacent.levels = 2;
  adjacent.probs = {0, 1.0, 0, 0};
  CHECK(homogeneity(adjacent) == 0.5);

  CooccurrenceMatrix two_apart;
  two_apart.levels = 3;
  two_apart.probs = {0, 0, 1.0, 0, 0, 0, 0, 0, 0};
  CHECK(homogeneity(two_apart) == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("band_homogeneity reference images") {
  GlcmParams p;  // levels 8, offset (0,1), symmetric

  const std::vector<std::uint16_t> flat(9, 1234);
  CHECK(band_homogeneity(flat, 3, 3, p) == 1.0);

  // 2x2 checkerboard: both pairs quantize to (0,7)/(7,0), so the whole
  // mass sits at |i-j| = 7.
  const std::vector<std::uint16_t> checker{0, 65535, 65535, 0};
  CHECK(std::abs(band_homogeneity(checker, 2, 2, p) - 0.02) < 1e-15);

  // Two flat rows: both horizontal pairs lie on the diagonal.
  const std::vector<std::uint16_t> rows2{0, 0, 65535, 65535};
  CHECK(band_homogeneity(rows2, 2, 2, p) == 1.0);
}

TEST_CASE("glcm matches naive pair enumeration on random images") {
  std::mt19937_64 g(33);
  for (int iter = 0; iter < 10; ++iter) {
    std::vector<std::uint16_t> vals(256);
    for (auto& v : vals) v = static_cast<std::uint16_t>(rng::bounded(g, 8));
    const QuantizedBand img = qband(16, 16, 8, vals);

    GlcmParams p;
    p.symmetric = (iter % 2) == 0;
    p.drow = static_cast<int>(rng::bounded(g, 3)) - 1;
    p.dcol = static_cast<int>(rng::bounded(g, 3)) - 1;
    if (p.drow == 0 && p.dcol == 0) p.dcol = 1;

    const CooccurrenceMatrix lib = glcm(img, p);
    const CooccurrenceMatrix ref = oracle::glcm_naive(img, p);
    REQUIRE(lib.probs.size() == ref.probs.size());
    for (std::size_t k = 0; k < lib.probs.size(); ++k)
      CHECK(lib.probs[k] == ref.probs[k]);

    CHECK(std::abs(prob_sum(lib) - 1.0) < 1e-12);
    const double h = homogeneity(lib);
    CHECK(h > 0.0);
    CHECK(h <= 1.0);
  }
}
