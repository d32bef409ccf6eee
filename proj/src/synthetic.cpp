#include "hsiband/synthetic.hpp"

#include <cmath>
#include <random>

#include "hsiband/rng.hpp"

namespace hsiband {

namespace {

// Label l in 0..n_classes scaled onto the u16 range, round half up.
std::uint16_t scale_label(int label, int n_classes) {
  const std::uint64_t a = static_cast<std::uint64_t>(label) * 65535;
  const std::uint64_t b = n_classes;
  return static_cast<std::uint16_t>((2 * a + b) / (2 * b));
}

std::uint16_t clamp_round_u16(double x) {
  if (x <= 0.0) return 0;
  if (x >= 65535.0) return 65535;
  return static_cast<std::uint16_t>(std::floor(x + 0.5));
}

}  // namespace

SyntheticData generate_synthetic(const SyntheticSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1)
    fail(errc::invalid_spec, "synthetic grid must be at least 1x1");
  if (spec.n_classes < 1 || spec.n_classes > kMaxLabel)
    fail(errc::invalid_spec, "n_classes must be in 1..16");
  if (spec.n_signal < 0 || spec.n_noise < 0 || spec.n_redundant < 0)
    fail(errc::invalid_spec, "band counts must be nonnegative");
  if (spec.total_bands() < 1)
    fail(errc::invalid_spec, "at least one band is required");
  if (spec.n_redundant > 0 && spec.n_signal < 1)
    fail(errc::invalid_spec, "redundant bands need a signal band to copy");
  if (!(spec.noise_sigma >= 0.0))
    fail(errc::invalid_spec, "noise_sigma must be >= 0");
  const std::size_t npix = static_cast<std::size_t>(spec.rows) * spec.cols;
  if (static_cast<std::size_t>(spec.n_classes) > npix)
    fail(errc::invalid_spec, "more classes than pixels");

  // Contiguous row-major blocks labeled 1..n_classes; the remainder when
  // the grid does not divide evenly stays label 0.
  std::vector<std::uint16_t> labels(npix, 0);
  const std::size_t block = npix / spec.n_classes;
  for (std::size_t p = 0; p < block * spec.n_classes; ++p)
    labels[p] = static_cast<std::uint16_t>(p / block + 1);
  GroundTruthMap gt(spec.rows, spec.cols, std::move(labels));

  const int total = spec.total_bands();
  std::vector<std::uint16_t> samples(npix * total);
  std::mt19937_64 gen(spec.seed);

  for (int b = 0; b < spec.n_signal; ++b) {
    std::uint16_t* out = samples.data() + static_cast<std::size_t>(b) * npix;
    for (std::size_t p = 0; p < npix; ++p) {
      const std::uint16_t base = scale_label(gt.labels[p], spec.n_classes);
      if (spec.noise_sigma > 0.0) {
        out[p] = clamp_round_u16(static_cast<double>(base) +
                                 spec.noise_sigma * rng::gaussian(gen));
      } else {
        out[p] = base;
      }
    }
  }
  for (int b = 0; b < spec.n_noise; ++b) {
    std::uint16_t* out =
        samples.data() + static_cast<std::size_t>(spec.n_signal + b) * npix;
    for (std::size_t p = 0; p < npix; ++p) out[p] = rng::uniform_u16(gen);
  }
  for (int b = 0; b < spec.n_redundant; ++b) {
    const std::size_t src =
        static_cast<std::size_t>(b % spec.n_signal) * npix;
    const std::size_t dst =
        static_cast<std::size_t>(spec.n_signal + spec.n_noise + b) * npix;
    std::copy_n(samples.data() + src, npix, samples.data() + dst);
  }

  return {Cube(total, spec.rows, spec.cols, std::move(samples)),
          std::move(gt)};
}

}  // namespace hsiband
