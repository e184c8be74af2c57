#include "cscnilm/prox_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cscnilm {

Coefficients prox_f1(const Coefficients& c, double t, double lambda_passive,
                     double lambda_active) {
  if (!(t > 0.0))
    throw std::invalid_argument("prox_f1: step parameter t must be positive");
  Coefficients out = c;
  if (out.channels() == 0)
    return out;

  auto passive = out.channel(0);
  double norm_sq = 0.0;
  for (double& v : passive) {
    v = std::max(v, 0.0);
    norm_sq += v * v;
  }
  const double norm = std::sqrt(norm_sq);
  const double threshold = lambda_passive / t;
  if (norm <= threshold) {
    // covers ||[c]_+|| = 0: the shrink factor is exactly zero
    std::fill(passive.begin(), passive.end(), 0.0);
  } else {
    const double factor = 1.0 - threshold / norm;
    for (double& v : passive)
      v *= factor;
  }

  const double shift = lambda_active / t;
  for (std::size_t i = 1; i < out.channels(); ++i) {
    for (double& v : out.channel(i))
      v = std::max(v - shift, 0.0);
  }
  return out;
}

Atoms prox_f2(const Atoms& p) {
  Atoms out = p;
  for (std::size_t i = 0; i < out.channels(); ++i) {
    auto pi = out.channel(i);
    double norm_sq = 0.0;
    for (double& v : pi) {
      v = std::max(v, 0.0);
      norm_sq += v * v;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm > 1.0) {
      for (double& v : pi)
        v /= norm;
    }
  }
  return out;
}

}  // namespace cscnilm
