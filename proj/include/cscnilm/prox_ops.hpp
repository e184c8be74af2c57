#pragma once

#include "cscnilm/signal_model.hpp"

namespace cscnilm {

// Proximal maps in the convention
//
//   prox_t^f(x) = argmin_d  f(d) + (t / 2) ||d - x||_2^2,
//
// so the penalty weights enter as lambda / t.

/// Channel 0: nonnegative group shrinkage (1 - (lp/t) / max(||[c]_+||, lp/t)) [c]_+.
/// Channels >= 1: [c - la/t]_+ componentwise.
Coefficients prox_f1(const Coefficients& c, double t, double lambda_passive,
                     double lambda_active);

/// Euclidean projection of every kernel onto {x >= 0, ||x||_2 <= 1}.
Atoms prox_f2(const Atoms& p);

}  // namespace cscnilm
