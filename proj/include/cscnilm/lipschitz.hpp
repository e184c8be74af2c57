#pragma once

#include <span>
#include <vector>

#include "cscnilm/signal_model.hpp"

namespace cscnilm {

/// Upper bounds on the block Lipschitz moduli of grad R.
///
///   L1 = 2 * sum_i ||P^i(p^i)||^2 bound,  L2 = 2 * sum_i ||C^i(c^i)||^2 bound.
struct LipschitzEstimate {
  double L1 = 0.0;
  double L2 = 0.0;
  std::vector<double> per_channel_P_bounds;
  std::vector<double> per_channel_C_bounds;
};

/// The four matrix-norm estimates of ||C^i(c^i)||; see c_block_bound.
struct CBlockEstimates {
  double l1_norm = 0.0;     ///< ||c||_1
  double column_sum = 0.0;  ///< sqrt(2q+1) * largest sum over a length-m window
  double row_sum = 0.0;     ///< sqrt(m) * largest sum over a length-(2q+1) window
  double frobenius = 0.0;   ///< Frobenius norm of the banded matrix

  double min() const;
};

/// ||p||_1, which dominates the spectral norm of c -> c * p (Young's inequality).
double p_block_bound(std::span<const double> p);

CBlockEstimates c_block_estimates(std::span<const double> c, std::size_t m, std::size_t q);

/// Minimum of the four estimates, each O(m + q) via window sums.
double c_block_bound(std::span<const double> c, std::size_t m, std::size_t q);

LipschitzEstimate estimate(const Coefficients& c, const Atoms& p);

/// L1 alone; the solver calls this before the coefficient update.
double lipschitz_c_block(const Atoms& p);

/// L2 alone, evaluated on the freshly updated coefficients.
double lipschitz_p_block(const Coefficients& c);

}  // namespace cscnilm
