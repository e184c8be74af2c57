#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cscnilm {

/// ON/OFF activity per sample; entries are 0 or 1.
using BinarySignal = std::vector<std::uint8_t>;

struct ConfusionCounts {
  double tp = 0.0;
  double tn = 0.0;
  double fp = 0.0;
  double fn = 0.0;
};

inline constexpr double kDefaultThresholdFraction = 0.01;
inline constexpr std::size_t kDefaultActivityRadius = 7;

/// Thresholds both signals at `fraction * max(truth)`.
/// Returns (truth bits, prediction bits).
std::pair<BinarySignal, BinarySignal> binarize(std::span<const double> pred,
                                               std::span<const double> truth,
                                               double fraction = kDefaultThresholdFraction);

/// out[i] = 1 iff bits[j] = 1 for some |i - j| <= radius.
BinarySignal dilate(const BinarySignal& bits, std::size_t radius);

/// TP and FP are taken against the dilated truth, TN and FN against the
/// undilated truth.
ConfusionCounts radius_counts(const BinarySignal& truth, const BinarySignal& pred,
                              std::size_t radius);

/// (TP TN - FP FN) / sqrt((TP+FP)(TP+FN)(TN+FP)(TN+FN)); 0 if any factor vanishes.
double mcc(const ConfusionCounts& counts);

double mcc_r(const BinarySignal& truth, const BinarySignal& pred, std::size_t radius);

/// (1 / 2m) sum (pred - truth)^2.
double mse(std::span<const double> pred, std::span<const double> truth);

}  // namespace cscnilm
