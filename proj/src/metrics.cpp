#include "cscnilm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cscnilm {

std::pair<BinarySignal, BinarySignal> binarize(std::span<const double> pred,
                                               std::span<const double> truth,
                                               double fraction) {
  if (pred.size() != truth.size())
    throw std::invalid_argument("binarize: prediction and truth differ in length");
  double peak = truth.empty() ? 0.0 : *std::max_element(truth.begin(), truth.end());
  const double theta = fraction * peak;
  BinarySignal t(truth.size()), p(pred.size());
  for (std::size_t i = 0; i < truth.size(); ++i) {
    t[i] = truth[i] >= theta ? 1 : 0;
    p[i] = pred[i] >= theta ? 1 : 0;
  }
  return {std::move(t), std::move(p)};
}

BinarySignal dilate(const BinarySignal& bits, std::size_t radius) {
  const std::size_t m = bits.size();
  radius = std::min(radius, m);
  BinarySignal out(m, 0);
  // Distance to the most recent set bit on the left, then on the right.
  std::size_t since = radius + 1;
  for (std::size_t i = 0; i < m; ++i) {
    since = bits[i] ? 0 : std::min(since + 1, radius + 1);
    if (since <= radius)
      out[i] = 1;
  }
  since = radius + 1;
  for (std::size_t i = m; i-- > 0;) {
    since = bits[i] ? 0 : std::min(since + 1, radius + 1);
    if (since <= radius)
      out[i] = 1;
  }
  return out;
}

ConfusionCounts radius_counts(const BinarySignal& truth, const BinarySignal& pred,
                              std::size_t radius) {
  if (truth.size() != pred.size())
    throw std::invalid_argument("mcc_r: truth and prediction differ in length");
  const BinarySignal dilated = dilate(truth, radius);
  ConfusionCounts c;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool t = truth[i] != 0;
    const bool td = dilated[i] != 0;
    const bool p = pred[i] != 0;
    c.tp += (td && p) ? 1.0 : 0.0;
    c.fp += (!td && p) ? 1.0 : 0.0;
    c.tn += (!t && !p) ? 1.0 : 0.0;
    c.fn += (t && !p) ? 1.0 : 0.0;
  }
  return c;
}

double mcc(const ConfusionCounts& c) {
  const double denom = (c.tp + c.fp) * (c.tp + c.fn) * (c.tn + c.fp) * (c.tn + c.fn);
  if (denom == 0.0)
    return 0.0;
  return (c.tp * c.tn - c.fp * c.fn) / std::sqrt(denom);
}

double mcc_r(const BinarySignal& truth, const BinarySignal& pred, std::size_t radius) {
  return mcc(radius_counts(truth, pred, radius));
}

double mse(std::span<const double> pred, std::span<const double> truth) {
  if (pred.size() != truth.size())
    throw std::invalid_argument("mse: prediction and truth differ in length");
  if (pred.empty())
    throw std::invalid_argument("mse: empty signals");
  double sum = 0.0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const double d = pred[i] - truth[i];
    sum += d * d;
  }
  return sum / (2.0 * static_cast<double>(pred.size()));
}

}  // namespace cscnilm
