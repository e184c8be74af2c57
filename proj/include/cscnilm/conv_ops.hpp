#pragma once

#include <span>
#include <vector>

#include "cscnilm/signal_model.hpp"

namespace cscnilm {

// Matrix-free convolution operators.
//
// For c of length m + 2q and p of length 2q + 1 (zero based),
//
//   (c * p)[j] = sum_{d=0}^{2q} c[j + d] * p[2q - d],   j = 0 .. m-1.
//
// No boundary extension is involved: every output sample sees a full
// window of c. P(p) and C(c) denote the linear maps c -> c * p and
// p -> c * p; only their transposes are applied here, never formed.

/// Single channel convolution; output has length c.size() - p.size() + 1.
std::vector<double> convolve_single(std::span<const double> c, std::span<const double> p);

/// Same as above with the expected (m, q) checked against the inputs.
std::vector<double> convolve_single(std::span<const double> c, std::span<const double> p,
                                    std::size_t m, std::size_t q);

/// Sum over channels of c^i * p^i.
std::vector<double> convolve_sum(const Coefficients& c, const Atoms& p);

/// Per channel P^i(p^i)^T r, shaped like the coefficients for a signal of length r.size().
Coefficients apply_P_adjoint(const Atoms& p, std::span<const double> r);

/// Per channel C^i(c^i)^T r, shaped like the atoms.
Atoms apply_C_adjoint(const Coefficients& c, std::span<const double> r);

/// u - c * p.
std::vector<double> residual(const AggregateSignal& u, const Coefficients& c, const Atoms& p);

/// R(c, p) = ||u - c * p||_2^2.
double data_term(const AggregateSignal& u, const Coefficients& c, const Atoms& p);

/// Gradient of R in the coefficient block, -2 P(p)^T (u - c * p).
Coefficients grad_c(const AggregateSignal& u, const Coefficients& c, const Atoms& p);

/// Gradient of R in the atom block, -2 C(c)^T (u - c * p).
Atoms grad_p(const AggregateSignal& u, const Coefficients& c, const Atoms& p);

}  // namespace cscnilm
