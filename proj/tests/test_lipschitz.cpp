#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "cscnilm/conv_ops.hpp"
#include "cscnilm/lipschitz.hpp"
#include "oracles.hpp"

using namespace cscnilm;
using oracle::Vec;

TEST_CASE("power iteration oracle on known spectra") {
  oracle::Dense I(3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    I.at(k, k) = 1.0;
  CHECK(oracle::spectral_norm(I) == doctest::Approx(1.0).epsilon(1e-12));
  oracle::Dense D(3, 3);
  D.at(0, 0) = 1;
  D.at(1, 1) = 2;
  D.at(2, 2) = 3;
  CHECK(oracle::spectral_norm(D) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("p bound examples") {
  CHECK(p_block_bound(Vec{0, 0, 0}) == 0.0);
  CHECK(p_block_bound(Vec{0, 1, 0}) == 1.0);
  CHECK(oracle::spectral_norm(oracle::dense_P(Vec{0, 1, 0}, 10)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p_block_bound(Vec{1, 1, 1}) == 3.0);
  CHECK(oracle::spectral_norm(oracle::dense_P(Vec{1, 1, 1}, 10)) <= 3.0);
  CHECK_THROWS_AS(p_block_bound(Vec{1, std::nan(""), 0}), std::invalid_argument);
}

TEST_CASE("c bound examples") {
  CHECK(c_block_bound(Vec(7, 0.0), 3, 2) == 0.0);

  for (std::size_t pos = 0; pos < 9; ++pos) {
    Vec c(9, 0.0);
    c[pos] = 1.0;
    const auto e = c_block_estimates(c, 5, 2);
    CHECK(e.l1_norm >= 1.0);
    CHECK(e.column_sum >= 1.0);
    CHECK(e.row_sum >= 1.0);
    CHECK(e.frobenius >= 1.0);
    CHECK(e.min() == 1.0);
  }
  // at either end of the series the impulse hits the stencil once
  Vec edge(9, 0.0);
  edge[0] = 1.0;
  CHECK(c_block_estimates(edge, 5, 2).frobenius == 1.0);

  CHECK_THROWS_AS(c_block_bound(Vec(6, 0.0), 3, 2), std::invalid_argument);
}

TEST_CASE("c estimates against the dense stencil") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = oracle::uniform_int(rng, 1, 20);
    const std::size_t q = oracle::uniform_int(rng, 0, 4);
    const Vec c = oracle::sparse_vec(rng, m + 2 * q, 0.4, 1.0);
    const auto C = oracle::dense_C(c, m, q);
    double frob = 0.0, max_col = 0.0, max_row = 0.0;
    for (std::size_t k = 0; k < C.cols; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < C.rows; ++j)
        s += std::abs(C.at(j, k));
      max_col = std::max(max_col, s);
    }
    for (std::size_t j = 0; j < C.rows; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < C.cols; ++k) {
        s += std::abs(C.at(j, k));
        frob += C.at(j, k) * C.at(j, k);
      }
      max_row = std::max(max_row, s);
    }
    const auto e = c_block_estimates(c, m, q);
    CHECK(e.frobenius == doctest::Approx(std::sqrt(frob)).epsilon(1e-12));
    CHECK(e.column_sum ==
          doctest::Approx(std::sqrt(static_cast<double>(2 * q + 1)) * max_col).epsilon(1e-12));
    CHECK(e.row_sum == doctest::Approx(std::sqrt(static_cast<double>(m)) * max_row).epsilon(1e-12));
  }
}

TEST_CASE("estimate examples") {
  const auto zero = estimate(Coefficients(2, 5, 1), Atoms(2, 1));
  CHECK(zero.L1 == 0.0);
  CHECK(zero.L2 == 0.0);

  Atoms p(1, 2);
  p.channel(0)[2] = 1.0;
  const auto e = estimate(Coefficients(1, 5, 2), p);
  CHECK(e.L1 == 2.0);
  CHECK(e.per_channel_P_bounds.size() == 1);
  CHECK(lipschitz_c_block(p) == 2.0);

  CHECK_THROWS_AS(estimate(Coefficients(2, 5, 1), Atoms(1, 1)), std::invalid_argument);
}

TEST_CASE("property: closed-form bounds dominate the spectral norms") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = oracle::uniform_int(rng, 1, 24);
    const std::size_t q = oracle::uniform_int(rng, 0, 4);
    const Vec p = oracle::uniform_vec(rng, 2 * q + 1, 0.0, 1.0);
    const Vec c = oracle::sparse_vec(rng, m + 2 * q, 0.3, 2.0);
    CHECK(p_block_bound(p) >= oracle::spectral_norm(oracle::dense_P(p, m)) - 1e-12);
    CHECK(c_block_bound(c, m, q) >= oracle::spectral_norm(oracle::dense_C(c, m, q)) - 1e-12);
  }
}

TEST_CASE("property: L1 dominates twice the squared operator norm") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = oracle::uniform_int(rng, 2, 16);
    const std::size_t q = oracle::uniform_int(rng, 0, 3);
    const std::size_t n = oracle::uniform_int(rng, 1, 3);
    Atoms p(n, q);
    Coefficients c(n, m, q);
    for (double& v : p.flat())
      v = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    for (double& v : c.flat())
      v = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    // stacked [P^1 ... P^N] and [C^1 ... C^N]
    oracle::Dense P(m, n * (m + 2 * q)), C(m, n * (2 * q + 1));
    for (std::size_t i = 0; i < n; ++i) {
      const Vec pi(p.channel(i).begin(), p.channel(i).end());
      const Vec ci(c.channel(i).begin(), c.channel(i).end());
      const auto Pi = oracle::dense_P(pi, m);
      const auto Ci = oracle::dense_C(ci, m, q);
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < Pi.cols; ++k)
          P.at(j, i * Pi.cols + k) = Pi.at(j, k);
        for (std::size_t k = 0; k < Ci.cols; ++k)
          C.at(j, i * Ci.cols + k) = Ci.at(j, k);
      }
    }
    const auto e = estimate(c, p);
    const double sp = oracle::spectral_norm(P), sc = oracle::spectral_norm(C);
    CHECK(e.L1 >= 2 * sp * sp - 1e-10);
    CHECK(e.L2 >= 2 * sc * sc - 1e-10);
  }
}

TEST_CASE("property: impulses attain the bounds") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = oracle::uniform_int(rng, 1, 20);
    const std::size_t q = oracle::uniform_int(rng, 0, 4);
    Vec p(2 * q + 1, 0.0);
    p[oracle::uniform_int(rng, 0, 2 * q)] = 1.0;
    Vec c(m + 2 * q, 0.0);
    c[oracle::uniform_int(rng, 0, m + 2 * q - 1)] = 1.0;
    CHECK(std::abs(p_block_bound(p) - oracle::spectral_norm(oracle::dense_P(p, m))) <= 1e-9);
    CHECK(std::abs(c_block_bound(c, m, q) - oracle::spectral_norm(oracle::dense_C(c, m, q))) <=
          1e-9);
  }
}

TEST_CASE("property: gradient Lipschitz inequalities") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = oracle::uniform_int(rng, 2, 30);
    const std::size_t q = oracle::uniform_int(rng, 0, 4);
    const std::size_t n = oracle::uniform_int(rng, 1, 3);
    Coefficients c(n, m, q), ct(n, m, q);
    Atoms p(n, q), pt(n, q);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (double& v : c.flat())
      v = d(rng);
    for (double& v : ct.flat())
      v = d(rng);
    for (double& v : p.flat())
      v = d(rng);
    for (double& v : pt.flat())
      v = d(rng);
    const AggregateSignal u(oracle::uniform_vec(rng, m, 0.0, 1.0));

    auto dist = [](std::span<const double> a, std::span<const double> b) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k)
        s += (a[k] - b[k]) * (a[k] - b[k]);
      return std::sqrt(s);
    };
    const double L1 = lipschitz_c_block(p);
    const double L2 = lipschitz_p_block(c);
    CHECK(dist(grad_c(u, c, p).flat(), grad_c(u, ct, p).flat()) <=
          L1 * dist(c.flat(), ct.flat()) * (1 + 1e-12));
    CHECK(dist(grad_p(u, c, p).flat(), grad_p(u, c, pt).flat()) <=
          L2 * dist(p.flat(), pt.flat()) * (1 + 1e-12));
  }
}

TEST_CASE("property: p bound is positively homogeneous") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec p = oracle::uniform_vec(rng, 2 * oracle::uniform_int(rng, 0, 6) + 1, 0.0, 1.0);
    const double s = std::uniform_real_distribution<double>(0.0, 5.0)(rng);
    Vec sp = p;
    for (double& v : sp)
      v *= s;
    CHECK(p_block_bound(sp) == doctest::Approx(s * p_block_bound(p)).epsilon(1e-14));
  }
  const Vec p{0.25, 0.5, 0.125};
  Vec twice = p;
  for (double& v : twice)
    v *= 2.0;
  CHECK(p_block_bound(twice) == 2.0 * p_block_bound(p));
}
