#include "cscnilm/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cscnilm {

namespace {

void reject_nan(std::span<const double> x, const char* who) {
  for (double v : x) {
    if (std::isnan(v))
      throw std::invalid_argument(std::string(who) + ": NaN entry");
  }
}

// Largest sum of |x| over any window of the given length.
double max_window_abs_sum(std::span<const double> x, std::size_t window) {
  double sum = 0.0;
  for (std::size_t k = 0; k < window; ++k)
    sum += std::abs(x[k]);
  double best = sum;
  for (std::size_t k = window; k < x.size(); ++k) {
    sum += std::abs(x[k]) - std::abs(x[k - window]);
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace

double CBlockEstimates::min() const {
  return std::min({l1_norm, column_sum, row_sum, frobenius});
}

double p_block_bound(std::span<const double> p) {
  reject_nan(p, "p_block_bound");
  double sum = 0.0;
  for (double v : p)
    sum += std::abs(v);
  return sum;
}

CBlockEstimates c_block_estimates(std::span<const double> c, std::size_t m, std::size_t q) {
  reject_nan(c, "c_block_bound");
  const std::size_t width = 2 * q + 1;
  if (m == 0 || c.size() != m + 2 * q)
    throw std::invalid_argument("c_block_bound: length inconsistent with (m, q)");

  CBlockEstimates est;
  for (double v : c)
    est.l1_norm += std::abs(v);
  // Columns of C^i are the 2q+1 windows of length m, rows the m windows of length 2q+1.
  est.column_sum = std::sqrt(static_cast<double>(width)) * max_window_abs_sum(c, m);
  est.row_sum = std::sqrt(static_cast<double>(m)) * max_window_abs_sum(c, width);

  // sum_{j<m} sum_{d<=2q} c[j+d]^2 through prefix sums of squares.
  std::vector<double> prefix(c.size() + 1, 0.0);
  for (std::size_t k = 0; k < c.size(); ++k)
    prefix[k + 1] = prefix[k] + c[k] * c[k];
  double frob_sq = 0.0;
  for (std::size_t j = 0; j < m; ++j)
    frob_sq += prefix[j + width] - prefix[j];
  est.frobenius = std::sqrt(std::max(frob_sq, 0.0));
  return est;
}

double c_block_bound(std::span<const double> c, std::size_t m, std::size_t q) {
  return c_block_estimates(c, m, q).min();
}

LipschitzEstimate estimate(const Coefficients& c, const Atoms& p) {
  if (c.channels() != p.channels() || c.half_width() != p.half_width())
    throw std::invalid_argument("Lipschitz estimate: coefficients and atoms disagree in shape");
  LipschitzEstimate est;
  const std::size_t m = c.signal_length();
  const std::size_t q = c.half_width();
  for (std::size_t i = 0; i < p.channels(); ++i) {
    const double pb = p_block_bound(p.channel(i));
    const double cb = c_block_bound(c.channel(i), m, q);
    est.per_channel_P_bounds.push_back(pb);
    est.per_channel_C_bounds.push_back(cb);
    est.L1 += pb * pb;
    est.L2 += cb * cb;
  }
  est.L1 *= 2.0;
  est.L2 *= 2.0;
  return est;
}

double lipschitz_c_block(const Atoms& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.channels(); ++i) {
    const double b = p_block_bound(p.channel(i));
    sum += b * b;
  }
  return 2.0 * sum;
}

double lipschitz_p_block(const Coefficients& c) {
  double sum = 0.0;
  for (std::size_t i = 0; i < c.channels(); ++i) {
    const double b = c_block_bound(c.channel(i), c.signal_length(), c.half_width());
    sum += b * b;
  }
  return 2.0 * sum;
}

}  // namespace cscnilm
