#pragma once

// Independent reference implementations used only by the tests: dense
// stencil matrices, power iteration, grid-refinement minimizers and a
// brute-force confusion matrix. Nothing here calls into the library
// operators it is meant to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<double>;

struct Dense {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;  // row-major

  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  Vec apply(const Vec& x) const {
    Vec y(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        y[i] += at(i, j) * x[j];
    return y;
  }
  Vec apply_t(const Vec& x) const {
    Vec y(cols, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        y[j] += at(i, j) * x[i];
    return y;
  }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    s += a[k] * b[k];
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

// m x (m+2q) matrix of c -> c * p: row j holds p reversed at columns j..j+2q.
inline Dense dense_P(const Vec& p, std::size_t m) {
  const std::size_t q = (p.size() - 1) / 2;
  Dense P(m, m + 2 * q);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t d = 0; d <= 2 * q; ++d)
      P.at(j, j + d) = p[2 * q - d];
  return P;
}

// m x (2q+1) matrix of p -> c * p: entry (j, k) = c[j + 2q - k].
inline Dense dense_C(const Vec& c, std::size_t m, std::size_t q) {
  Dense C(m, 2 * q + 1);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k <= 2 * q; ++k)
      C.at(j, k) = c[j + 2 * q - k];
  return C;
}

// Triple loop over (j, k, l) with the index constraint written out, i.e. the
// defining sum with 1-based indices shifted by one.
inline Vec conv_loop(const Vec& c, const Vec& p, std::size_t m) {
  const std::size_t q = (p.size() - 1) / 2;
  Vec out(m, 0.0);
  for (std::size_t j = 1; j <= m; ++j)
    for (std::size_t k = 1; k <= c.size(); ++k)
      for (std::size_t l = 1; l <= p.size(); ++l)
        if (k + l == j + 2 * q + 1)
          out[j - 1] += c[k - 1] * p[l - 1];
  return out;
}

// Largest singular value by power iteration on A^T A.
inline double spectral_norm(const Dense& A, int max_iter = 20000, double tol = 1e-15) {
  Vec x(A.cols);
  for (std::size_t k = 0; k < x.size(); ++k)
    x[k] = 1.0 + 0.1 * std::sin(1.0 + 3.0 * static_cast<double>(k));
  double n = norm2(x);
  if (n == 0.0)
    return 0.0;
  for (double& v : x)
    v /= n;
  double sigma = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Vec y = A.apply_t(A.apply(x));
    const double ny = norm2(y);
    if (ny == 0.0)
      return 0.0;
    for (std::size_t k = 0; k < x.size(); ++k)
      x[k] = y[k] / ny;
    const double next = std::sqrt(ny);
    if (std::abs(next - sigma) <= tol * next) {
      sigma = next;
      break;
    }
    sigma = next;
  }
  return norm2(A.apply(x));
}

// Minimizes f over the box [lo, hi]^n by repeated grid search: each level
// lays `points` nodes per axis around the incumbent and shrinks the spacing
// geometrically so the last level has spacing `final_h`.
inline Vec grid_minimize(const std::function<double(const Vec&)>& f, std::size_t n, double lo,
                         double hi, std::size_t points, int levels, double final_h) {
  Vec center(n, 0.5 * (lo + hi));
  double h = (hi - lo) / static_cast<double>(points - 1);
  const double ratio = std::pow(h / final_h, 1.0 / levels);
  Vec best = center;
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx(n);
  Vec x(n);
  for (int level = 0; level <= levels; ++level) {
    const double half = 0.5 * static_cast<double>(points - 1) * h;
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (std::size_t k = 0; k < n; ++k)
        x[k] = std::clamp(center[k] - half + h * static_cast<double>(idx[k]), lo, hi);
      const double v = f(x);
      if (v < best_val) {
        best_val = v;
        best = x;
      }
      std::size_t k = 0;
      while (k < n && ++idx[k] == points)
        idx[k++] = 0;
      if (k == n)
        break;
    }
    center = best;
    h /= ratio;
  }
  return best;
}

struct Confusion {
  double tp = 0, tn = 0, fp = 0, fn = 0;
};

inline Confusion confusion(const std::vector<std::uint8_t>& truth,
                           const std::vector<std::uint8_t>& pred) {
  Confusion c;
  for (std::size_t k = 0; k < truth.size(); ++k) {
    if (truth[k] && pred[k])
      c.tp += 1;
    else if (!truth[k] && !pred[k])
      c.tn += 1;
    else if (!truth[k] && pred[k])
      c.fp += 1;
    else
      c.fn += 1;
  }
  return c;
}

inline double textbook_mcc(const Confusion& c) {
  const double den = (c.tp + c.fp) * (c.tp + c.fn) * (c.tn + c.fp) * (c.tn + c.fn);
  if (den == 0.0)
    return 0.0;
  return (c.tp * c.tn - c.fp * c.fn) / std::sqrt(den);
}

// Hand-rolled generators.

inline Vec uniform_vec(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  Vec v(n);
  for (double& x : v)
    x = d(rng);
  return v;
}

// Nonnegative with roughly `density` of the entries nonzero.
inline Vec sparse_vec(std::mt19937_64& rng, std::size_t n, double density, double hi) {
  std::bernoulli_distribution on(density);
  std::uniform_real_distribution<double> d(0.0, hi);
  Vec v(n, 0.0);
  for (double& x : v)
    if (on(rng))
      x = d(rng);
  return v;
}

inline std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution b(p);
  std::vector<std::uint8_t> v(n);
  for (auto& x : v)
    x = b(rng) ? 1 : 0;
  return v;
}

// Prox objectives in the convention f(d) + (t/2)||d - x||^2.

inline double group_prox_objective(const Vec& d, const Vec& x, double t, double lambda) {
  double dist = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] < 0.0)
      return std::numeric_limits<double>::infinity();
    dist += (d[k] - x[k]) * (d[k] - x[k]);
  }
  return lambda * norm2(d) + 0.5 * t * dist;
}

inline double l1_prox_objective(const Vec& d, const Vec& x, double t, double lambda) {
  double val = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] < 0.0)
      return std::numeric_limits<double>::infinity();
    val += lambda * d[k] + 0.5 * t * (d[k] - x[k]) * (d[k] - x[k]);
  }
  return val;
}

inline double ball_projection_objective(const Vec& d, const Vec& x) {
  double dist = 0.0, n2 = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] < 0.0)
      return std::numeric_limits<double>::infinity();
    n2 += d[k] * d[k];
    dist += (d[k] - x[k]) * (d[k] - x[k]);
  }
  if (n2 > 1.0 + 1e-12)
    return std::numeric_limits<double>::infinity();
  return 0.5 * dist;
}

// Projection onto {d >= 0, |d| <= 1} by grid search in hyperspherical
// coordinates: s[0] is the radius, the rest are angles over the positive
// orthant. Clamping s to [0, 1] makes the sphere and the faces reachable.
inline Vec polar_to_orthant(const Vec& s) {
  const double half_pi = 2.0 * std::atan(1.0);
  Vec d(s.size());
  double r = s[0];
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const double a = half_pi * s[k + 1];
    d[k] = r * std::cos(a);
    r *= std::sin(a);
  }
  d.back() = r;
  return d;
}

inline Vec ball_grid_minimize(const Vec& x, std::size_t points, int levels, double final_h) {
  auto f = [&](const Vec& s) { return ball_projection_objective(polar_to_orthant(s), x); };
  return polar_to_orthant(grid_minimize(f, x.size(), 0.0, 1.0, points, levels, final_h));
}

}  // namespace oracle
