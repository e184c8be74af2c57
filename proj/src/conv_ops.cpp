#include "cscnilm/conv_ops.hpp"

#include <stdexcept>
#include <string>

namespace cscnilm {

namespace {

void check_kernel(std::span<const double> c, std::span<const double> p) {
  if (p.empty() || p.size() % 2 == 0)
    throw std::invalid_argument("atom length must be odd, got " + std::to_string(p.size()));
  if (c.size() < p.size())
    throw std::invalid_argument("coefficient series shorter than the atom");
}

void check_pair(const Coefficients& c, const Atoms& p) {
  if (c.channels() != p.channels())
    throw std::invalid_argument("channel count mismatch: " + std::to_string(c.channels()) +
                                " coefficient series vs " + std::to_string(p.channels()) +
                                " atoms");
  if (c.half_width() != p.half_width())
    throw std::invalid_argument("half width mismatch between coefficients and atoms");
}

void check_signal(const AggregateSignal& u, const Coefficients& c) {
  if (u.size() != c.signal_length())
    throw std::invalid_argument("signal length " + std::to_string(u.size()) +
                                " does not match coefficient layout (m = " +
                                std::to_string(c.signal_length()) + ")");
}

// out[j] += sum_d c[j + d] * p[2q - d], swept one tap at a time so the
// inner loop is a contiguous axpy.
void accumulate_conv(std::span<const double> c, std::span<const double> p,
                     std::span<double> out) {
  const std::size_t width = p.size();
  const std::size_t m = out.size();
  double* o = out.data();
  for (std::size_t d = 0; d < width; ++d) {
    const double w = p[width - 1 - d];
    if (w == 0.0)
      continue;
    const double* cd = c.data() + d;
    for (std::size_t j = 0; j < m; ++j)
      o[j] += w * cd[j];
  }
}

}  // namespace

std::vector<double> convolve_single(std::span<const double> c, std::span<const double> p) {
  check_kernel(c, p);
  std::vector<double> out(c.size() - p.size() + 1, 0.0);
  accumulate_conv(c, p, out);
  return out;
}

std::vector<double> convolve_single(std::span<const double> c, std::span<const double> p,
                                    std::size_t m, std::size_t q) {
  if (p.size() != 2 * q + 1 || c.size() != m + 2 * q)
    throw std::invalid_argument("convolve_single: lengths inconsistent with (m, q)");
  return convolve_single(c, p);
}

std::vector<double> convolve_sum(const Coefficients& c, const Atoms& p) {
  check_pair(c, p);
  std::vector<double> out(c.signal_length(), 0.0);
  for (std::size_t i = 0; i < c.channels(); ++i)
    accumulate_conv(c.channel(i), p.channel(i), out);
  return out;
}

Coefficients apply_P_adjoint(const Atoms& p, std::span<const double> r) {
  const std::size_t q = p.half_width();
  const std::size_t width = p.length();
  if (r.empty())
    throw std::invalid_argument("apply_P_adjoint: empty residual");
  Coefficients out(p.channels(), r.size(), q);
  for (std::size_t i = 0; i < p.channels(); ++i) {
    auto pi = p.channel(i);
    auto oi = out.channel(i);
    const std::vector<double> reversed(pi.rbegin(), pi.rend());
    // (P^T r)[j + d] += r[j] p[2q - d], scattered row by row.
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double rj = r[j];
      if (rj == 0.0)
        continue;
      double* ok = oi.data() + j;
      for (std::size_t d = 0; d < width; ++d)
        ok[d] += rj * reversed[d];
    }
  }
  return out;
}

Atoms apply_C_adjoint(const Coefficients& c, std::span<const double> r) {
  const std::size_t q = c.half_width();
  const std::size_t width = 2 * q + 1;
  if (r.size() != c.signal_length())
    throw std::invalid_argument("apply_C_adjoint: residual length does not match coefficients");
  Atoms out(c.channels(), q);
  for (std::size_t i = 0; i < c.channels(); ++i) {
    auto ci = c.channel(i);
    // acc[d] = sum_j r[j] c[j + d], then (C^T r)[2q - d] = acc[d]
    std::vector<double> acc(width, 0.0);
    for (std::size_t j = 0; j < r.size(); ++j) {
      const double rj = r[j];
      if (rj == 0.0)
        continue;
      const double* cj = ci.data() + j;
      for (std::size_t d = 0; d < width; ++d)
        acc[d] += rj * cj[d];
    }
    auto oi = out.channel(i);
    for (std::size_t d = 0; d < width; ++d)
      oi[width - 1 - d] = acc[d];
  }
  return out;
}

std::vector<double> residual(const AggregateSignal& u, const Coefficients& c, const Atoms& p) {
  check_signal(u, c);
  std::vector<double> r = convolve_sum(c, p);
  auto us = u.samples();
  for (std::size_t j = 0; j < r.size(); ++j)
    r[j] = us[j] - r[j];
  return r;
}

double data_term(const AggregateSignal& u, const Coefficients& c, const Atoms& p) {
  double sum = 0.0;
  for (double v : residual(u, c, p))
    sum += v * v;
  return sum;
}

Coefficients grad_c(const AggregateSignal& u, const Coefficients& c, const Atoms& p) {
  const std::vector<double> r = residual(u, c, p);
  Coefficients g = apply_P_adjoint(p, r);
  for (double& v : g.flat())
    v *= -2.0;
  return g;
}

Atoms grad_p(const AggregateSignal& u, const Coefficients& c, const Atoms& p) {
  const std::vector<double> r = residual(u, c, p);
  Atoms g = apply_C_adjoint(c, r);
  for (double& v : g.flat())
    v *= -2.0;
  return g;
}

}  // namespace cscnilm
