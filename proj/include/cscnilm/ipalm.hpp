#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "cscnilm/signal_model.hpp"

namespace cscnilm {

/// Raised when an iterate or step size stops being finite.
class NumericalDivergence : public std::runtime_error {
public:
  NumericalDivergence(std::size_t iteration, const std::string& what);
  std::size_t iteration() const { return iteration_; }

private:
  std::size_t iteration_;
};

struct SolveResult {
  Coefficients coefficients;
  Atoms atoms;
  std::vector<double> psi_history;        ///< Psi_0 .. Psi_K
  std::vector<double> data_term_history;  ///< R(c_k, p_k) alongside psi_history
  std::size_t iterations = 0;
  bool converged = false;
  double final_objective = 0.0;
};

/// Called after every iteration with (k, Psi_k, R(c_k, p_k)).
using ProgressObserver = std::function<void(std::size_t, double, double)>;

/// F(c, p) = R + lambda_p ||c^1||_2 + lambda_a sum_{i>=2} ||c^i||_1,
/// or +infinity if (c, p) violates a constraint beyond kFeasibilityTolerance.
double objective(const AggregateSignal& u, const Coefficients& c, const Atoms& p,
                 double lambda_passive, double lambda_active);

/// (abar_b + 2 bbar_b) / (2 (1 - eps - abar_b)) for block b in {0, 1}.
double inertia_coefficient(const SolverConfig& config, int block);

/// Random-feature initialization: each channel starts as one window of u
/// (centered on a random nonzero sample) placed back at its own position.
SolverState initialize(const AggregateSignal& u, const SolverConfig& config,
                       std::mt19937_64& rng);

/// Same, seeded from config.seed.
SolverState initialize(const AggregateSignal& u, const SolverConfig& config);

/// One inertial coefficient update followed by one inertial atom update.
SolverState step(const SolverState& state, const AggregateSignal& u,
                 const SolverConfig& config);

SolveResult solve(const AggregateSignal& u, const SolverConfig& config,
                  const ProgressObserver& observer = {});

/// Iterates from a given state instead of the random initialization.
SolveResult solve_from(SolverState state, const AggregateSignal& u, const SolverConfig& config,
                       const ProgressObserver& observer = {});

/// c^i * p^i for every channel; channel 0 is the passive prediction.
std::vector<std::vector<double>> reconstruct_channels(const SolveResult& result);

/// Sum of channels 1 .. N-1 (all zeros when N = 1).
std::vector<double> active_prediction(const std::vector<std::vector<double>>& channels);

}  // namespace cscnilm
