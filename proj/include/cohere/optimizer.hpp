#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cohere {

struct OptimizerConfig {
  int restarts = 20;
  int max_iters = 2000;
  double tol = 1e-8;  // simplex-size convergence threshold
  std::uint64_t seed = 42;

  /// Throws InvalidConfig unless restarts, max_iters > 0 and 0 < tol < 1.
  void validate() const;
};

using Objective = std::function<double(std::span<const double>)>;

struct SearchResult {
  double value = 0.0;
  std::vector<double> point;
  int finite_restarts = 0;
  long evaluations = 0;
};

/// Derivative-free simplex minimisation with random restarts. Restart r
/// starts from a point drawn uniformly in [-pi, pi]^n using the stream
/// derive_rng(cfg.seed, {r}); the result is the best value seen over all
/// restarts. Throws OptimizerFailure if no restart produced a finite value.
SearchResult minimize(const Objective& f, std::size_t n, const OptimizerConfig& cfg);

/// Same as minimize() on -f, reported with the sign restored.
SearchResult maximize(const Objective& f, std::size_t n, const OptimizerConfig& cfg);

}  // namespace cohere
