#include "cscnilm/ipalm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cscnilm/conv_ops.hpp"
#include "cscnilm/lipschitz.hpp"
#include "cscnilm/prox_ops.hpp"

namespace cscnilm {

namespace {

// tau never collapses to zero (all-zero atoms or coefficients).
constexpr double kLipschitzFloor = 1e-12;

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    sum += d * d;
  }
  return sum;
}

// Pushes the newest bound and returns the maximum over the retained window.
double push_running_max(std::deque<double>& history, double value, std::size_t window) {
  history.push_back(value);
  if (window > 0) {
    while (history.size() > window + 1)
      history.pop_front();
  }
  return *std::max_element(history.begin(), history.end());
}

// x + w (x - x_prev)
template <class Array>
Array extrapolate(const Array& x, const Array& x_prev, double w) {
  Array out = x;
  auto o = out.flat();
  auto a = x.flat();
  auto b = x_prev.flat();
  for (std::size_t k = 0; k < o.size(); ++k)
    o[k] = a[k] + w * (a[k] - b[k]);
  return out;
}

void require_finite(double v, std::size_t iteration, const char* what) {
  if (!std::isfinite(v))
    throw NumericalDivergence(iteration, what);
}


// f1(c) + f2(p); +inf outside the feasible set.
double penalty(const Coefficients& c, const Atoms& p, double lambda_passive,
               double lambda_active) {
  if (!c.all_nonnegative() || !p.feasible())
    return std::numeric_limits<double>::infinity();
  double total = 0.0;
  if (c.channels() > 0) {
    double sq = 0.0;
    for (double v : c.channel(0))
      sq += v * v;
    total += lambda_passive * std::sqrt(sq);
  }
  for (std::size_t i = 1; i < c.channels(); ++i) {
    double l1 = 0.0;
    for (double v : c.channel(i))
      l1 += std::abs(v);
    total += lambda_active * l1;
  }
  return total;
}

double modified_energy(const AggregateSignal& u, const SolverState& s, const SolverConfig& cfg,
                       double* data_out) {
  const double r = data_term(u, s.c_curr, s.p_curr);
  if (data_out)
    *data_out = r;
  const double f = r + penalty(s.c_curr, s.p_curr, cfg.lambda_passive, cfg.lambda_active);
  return f + 0.5 * s.gamma1 * squared_distance(s.c_curr.flat(), s.c_prev.flat()) +
         0.5 * s.gamma2 * squared_distance(s.p_curr.flat(), s.p_prev.flat());
}

}  // namespace

NumericalDivergence::NumericalDivergence(std::size_t iteration, const std::string& what)
    : std::runtime_error("numerical divergence at iteration " + std::to_string(iteration) +
                         ": " + what),
      iteration_(iteration) {}

double objective(const AggregateSignal& u, const Coefficients& c, const Atoms& p,
                 double lambda_passive, double lambda_active) {
  const double r = data_term(u, c, p);
  return r + penalty(c, p, lambda_passive, lambda_active);
}

double inertia_coefficient(const SolverConfig& config, int block) {
  const double a = config.alpha_bar[block];
  const double b = config.beta_bar[block];
  return (a + 2.0 * b) / (2.0 * (1.0 - config.epsilon - a));
}

SolverState initialize(const AggregateSignal& u, const SolverConfig& config,
                       std::mt19937_64& rng) {
  config.validate();
  const std::size_t m = u.size();
  const std::size_t q = config.half_width;
  const std::size_t n = config.num_channels;
  auto us = u.samples();

  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < m; ++j) {
    if (us[j] > 0.0)
      nonzero.push_back(j);
  }
  if (nonzero.empty())
    throw std::invalid_argument("initialize: aggregate signal is identically zero");

  SolverState s;
  s.c_curr = Coefficients(n, m, q);
  s.p_curr = Atoms(n, q);
  std::uniform_int_distribution<std::size_t> pick(0, nonzero.size() - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t center = nonzero[pick(rng)];
    auto atom = s.p_curr.channel(i);
    // atom[q + s] = u[center + s]; samples outside the series count as zero.
    double norm_sq = 0.0;
    for (std::size_t k = 0; k <= 2 * q; ++k) {
      const std::ptrdiff_t j = static_cast<std::ptrdiff_t>(center + k) -
                               static_cast<std::ptrdiff_t>(q);
      const double v = (j >= 0 && j < static_cast<std::ptrdiff_t>(m)) ? std::max(us[j], 0.0)
                                                                       : 0.0;
      atom[k] = v;
      norm_sq += v * v;
    }
    const double norm = std::sqrt(norm_sq);
    if (norm > 0.0) {
      for (double& v : atom)
        v /= norm;
      s.c_curr.channel(i)[center + q] = norm;
    } else {
      atom[q] = 1.0;
      s.c_curr.channel(i)[center + q] = 1.0;
    }
  }
  s.c_prev = s.c_curr;
  s.p_prev = s.p_curr;

  s.L1_running_max = push_running_max(
      s.L1_history, std::max(lipschitz_c_block(s.p_curr), kLipschitzFloor),
      config.lipschitz_window);
  s.L2_running_max = push_running_max(
      s.L2_history, std::max(lipschitz_p_block(s.c_curr), kLipschitzFloor),
      config.lipschitz_window);
  s.gamma1 = inertia_coefficient(config, 0) * s.L1_running_max;
  s.gamma2 = inertia_coefficient(config, 1) * s.L2_running_max;
  s.psi = modified_energy(u, s, config, &s.data_term);
  return s;
}

SolverState initialize(const AggregateSignal& u, const SolverConfig& config) {
  std::mt19937_64 rng(config.seed);
  return initialize(u, config, rng);
}

SolverState step(const SolverState& state, const AggregateSignal& u,
                 const SolverConfig& config) {
  const std::size_t k = state.iter;
  const double alpha = config.alpha_step;
  const double beta = config.beta_step;
  const double eps = config.epsilon;

  SolverState next;
  next.iter = k + 1;
  next.L1_history = state.L1_history;
  next.L2_history = state.L2_history;

  // Coefficient block.
  const double L1 = std::max(lipschitz_c_block(state.p_curr), kLipschitzFloor);
  require_finite(L1, k, "coefficient-block Lipschitz bound");
  next.L1_running_max = push_running_max(next.L1_history, L1, config.lipschitz_window);
  next.gamma1 = inertia_coefficient(config, 0) * next.L1_running_max;
  const double tau1 =
      config.step_safety * ((1.0 + eps) * next.gamma1 + (1.0 + beta) * L1) / (2.0 - alpha);
  require_finite(tau1, k, "coefficient step size");

  Coefficients y1 = extrapolate(state.c_curr, state.c_prev, alpha);
  const Coefficients z1 = extrapolate(state.c_curr, state.c_prev, beta);
  const Coefficients g1 = grad_c(u, z1, state.p_curr);
  {
    auto y = y1.flat();
    auto g = g1.flat();
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] -= g[j] / tau1;
  }
  next.c_curr = prox_f1(y1, tau1, config.lambda_passive, config.lambda_active);
  next.c_prev = state.c_curr;
  if (!next.c_curr.all_finite())
    throw NumericalDivergence(k, "non-finite coefficients");

  // Atom block, linearized at the new coefficients.
  const double L2 = std::max(lipschitz_p_block(next.c_curr), kLipschitzFloor);
  require_finite(L2, k, "atom-block Lipschitz bound");
  next.L2_running_max = push_running_max(next.L2_history, L2, config.lipschitz_window);
  next.gamma2 = inertia_coefficient(config, 1) * next.L2_running_max;
  const double tau2 =
      config.step_safety * ((1.0 + eps) * next.gamma2 + (1.0 + beta) * L2) / (2.0 - alpha);
  require_finite(tau2, k, "atom step size");

  Atoms y2 = extrapolate(state.p_curr, state.p_prev, alpha);
  const Atoms z2 = extrapolate(state.p_curr, state.p_prev, beta);
  const Atoms g2 = grad_p(u, next.c_curr, z2);
  {
    auto y = y2.flat();
    auto g = g2.flat();
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] -= g[j] / tau2;
  }
  next.p_curr = prox_f2(y2);
  next.p_prev = state.p_curr;
  if (!next.p_curr.all_finite())
    throw NumericalDivergence(k, "non-finite atoms");

  next.psi = modified_energy(u, next, config, &next.data_term);
  require_finite(next.psi, k, "modified energy");
  return next;
}

SolveResult solve_from(SolverState state, const AggregateSignal& u, const SolverConfig& config,
                       const ProgressObserver& observer) {
  config.validate();
  SolveResult result;
  result.psi_history.push_back(state.psi);
  result.data_term_history.push_back(state.data_term);

  for (std::size_t it = 0; it < config.max_iter; ++it) {
    const double prev = state.psi;
    state = step(state, u, config);
    result.psi_history.push_back(state.psi);
    result.data_term_history.push_back(state.data_term);
    if (observer)
      observer(state.iter, state.psi, state.data_term);
    if (state.psi == 0.0 || std::abs(state.psi - prev) / prev < config.rel_tol) {
      result.converged = true;
      break;
    }
  }

  result.iterations = state.iter;
  result.final_objective =
      objective(u, state.c_curr, state.p_curr, config.lambda_passive, config.lambda_active);
  result.coefficients = std::move(state.c_curr);
  result.atoms = std::move(state.p_curr);
  return result;
}

SolveResult solve(const AggregateSignal& u, const SolverConfig& config,
                  const ProgressObserver& observer) {
  return solve_from(initialize(u, config), u, config, observer);
}

std::vector<std::vector<double>> reconstruct_channels(const SolveResult& result) {
  std::vector<std::vector<double>> channels;
  channels.reserve(result.atoms.channels());
  for (std::size_t i = 0; i < result.atoms.channels(); ++i)
    channels.push_back(convolve_single(result.coefficients.channel(i), result.atoms.channel(i)));
  return channels;
}

std::vector<double> active_prediction(const std::vector<std::vector<double>>& channels) {
  if (channels.empty())
    return {};
  std::vector<double> active(channels.front().size(), 0.0);
  for (std::size_t i = 1; i < channels.size(); ++i) {
    for (std::size_t j = 0; j < active.size(); ++j)
      active[j] += channels[i][j];
  }
  return active;
}

}  // namespace cscnilm
