#include "hsiband/info_metrics.hpp"

#include <cmath>

namespace hsiband {

Histogram JointHistogram::marginal_a() const {
  Histogram h;
  h.levels = levels_a;
  h.counts.assign(levels_a, 0);
  h.total = total;
  for (int i = 0; i < levels_a; ++i)
    for (int j = 0; j < levels_b; ++j) h.counts[i] += count(i, j);
  return h;
}

Histogram JointHistogram::marginal_b() const {
  Histogram h;
  h.levels = levels_b;
  h.counts.assign(levels_b, 0);
  h.total = total;
  for (int i = 0; i < levels_a; ++i)
    for (int j = 0; j < levels_b; ++j) h.counts[j] += count(i, j);
  return h;
}

Histogram histogram(std::span<const std::uint16_t> symbols, int levels) {
  if (levels < 1) fail(errc::invalid_levels, "histogram needs levels >= 1");
  if (symbols.empty()) fail(errc::empty_input, "histogram of empty sequence");
  Histogram h;
  h.levels = levels;
  h.counts.assign(levels, 0);
  for (const auto s : symbols) {
    if (s >= levels)
      fail(errc::symbol_out_of_range,
           "symbol " + std::to_string(s) + " >= levels " +
               std::to_string(levels));
    ++h.counts[s];
  }
  h.total = symbols.size();
  return h;
}

JointHistogram joint_histogram(std::span<const std::uint16_t> a,
                               std::span<const std::uint16_t> b, int levels_a,
                               int levels_b) {
  if (levels_a < 1 || levels_b < 1)
    fail(errc::invalid_levels, "joint histogram needs levels >= 1");
  if (a.size() != b.size())
    fail(errc::length_mismatch, "paired sequences differ in length");
  if (a.empty()) fail(errc::empty_input, "joint histogram of empty sequences");
  JointHistogram j;
  j.levels_a = levels_a;
  j.levels_b = levels_b;
  j.counts.assign(static_cast<std::size_t>(levels_a) * levels_b, 0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] >= levels_a || b[k] >= levels_b)
      fail(errc::symbol_out_of_range, "joint histogram symbol out of range");
    ++j.counts[static_cast<std::size_t>(a[k]) * levels_b + b[k]];
  }
  j.total = a.size();
  return j;
}

double entropy(const Histogram& h) {
  if (h.total == 0) fail(errc::empty_histogram, "entropy of empty histogram");
  const double n = static_cast<double>(h.total);
  double sum = 0.0;
  for (const auto c : h.counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    sum -= p * std::log2(p);
  }
  return sum;
}

double mutual_information(const JointHistogram& j) {
  if (j.total == 0)
    fail(errc::empty_histogram, "mutual information of empty histogram");

  std::vector<std::uint64_t> row(j.levels_a, 0);
  std::vector<std::uint64_t> col(j.levels_b, 0);
  for (int i = 0; i < j.levels_a; ++i)
    for (int k = 0; k < j.levels_b; ++k) {
      row[i] += j.count(i, k);
      col[k] += j.count(i, k);
    }

  // p(i,j) / (pA(i) pB(j)) = count * total / (row * col); the integer
  // products stay exact in double for any realistic pixel count.
  const double n = static_cast<double>(j.total);
  double sum = 0.0;
  for (int i = 0; i < j.levels_a; ++i) {
    for (int k = 0; k < j.levels_b; ++k) {
      const std::uint64_t c = j.count(i, k);
      if (c == 0) continue;
      const double p = static_cast<double>(c) / n;
      const double ratio = (static_cast<double>(c) * n) /
                           (static_cast<double>(row[i]) *
                            static_cast<double>(col[k]));
      sum += p * std::log2(ratio);
    }
  }
  if (sum < 0.0 && sum >= -1e-12) sum = 0.0;
  return sum;
}

}  // namespace hsiband
