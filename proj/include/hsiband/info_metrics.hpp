#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hsiband/error.hpp"

namespace hsiband {

struct Histogram {
  int levels = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

// Joint occurrence counts of paired symbols, counts[i * levels_b + j].
struct JointHistogram {
  int levels_a = 0;
  int levels_b = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  std::uint64_t count(int i, int j) const {
    return counts[static_cast<std::size_t>(i) * levels_b + j];
  }

  Histogram marginal_a() const;
  Histogram marginal_b() const;
};

Histogram histogram(std::span<const std::uint16_t> symbols, int levels);

JointHistogram joint_histogram(std::span<const std::uint16_t> a,
                               std::span<const std::uint16_t> b, int levels_a,
                               int levels_b);

// Shannon entropy in bits, 0 log 0 := 0.
double entropy(const Histogram& h);

// Mutual information in bits: sum over occupied cells of
// p(i,j) * log2(p(i,j) / (pA(i) pB(j))). A result within 1e-12 below
// zero clamps to exactly 0.
double mutual_information(const JointHistogram& j);

}  // namespace hsiband
