#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cohere {

using Bit = int;  // 0 or 1

/// Joint outcome table P(x, y | X, Y) of the PR box, indexed [x][y].
using JointTable = std::array<std::array<double, 2>, 2>;

/// P(x, y | X, Y) = 1/2 when y = X.Y xor x, else 0.
JointTable pr_box_statistics(Bit X, Bit Y);

/// State omega_{y|Y} that Bob's setting Y and outcome y steer on Alice's side.
struct SteeredState {
  Bit y_setting = 0;
  Bit y_outcome = 0;

  bool operator==(const SteeredState&) const = default;
};

/// Alice's deterministic outcome X.Y xor y on the steered state.
Bit steered_outcome(const SteeredState& s, Bit X);

/// Statistics of measuring X = 1 on the post-state of (X = 0, outcome 0).
struct SequentialTransition {
  std::array<double, 2> p{0.5, 0.5};

  /// Throws InvalidDistribution unless p is a probability vector (1e-9).
  static SequentialTransition from_probs(double p0, double p1);
};

/// 1/2 sum_i |delta_{Y,i} - t.p[i]|, the MOD-K lower bound for omega_{0|Y}
/// restricted to the candidate measurements X' in {0, 1}. Throws
/// UnsupportedState when y_outcome != 0.
double pr_mod_k_lower_bound(const SteeredState& s, const SequentialTransition& t);

/// Lower bound for omega_{0|0} plus lower bound for omega_{0|1}.
double pr_gap_sum(const SequentialTransition& t);

/// sqrt(p0 p1) + sqrt(q0 q1): the qubit upper bound on the same sum for
/// quantum states reproducing the given reference statistics.
double quantum_counterpart_sum(const std::array<double, 2>& stats0,
                               const std::array<double, 2>& stats1);

/// One run of Alice's sequential X = 0 then X = 1 measurement on omega_{0|Y}.
struct SequentialRun {
  SteeredState actual;
  Bit first_outcome = 0;                  // X = 0
  bool repeatable = false;                // X = 0 again gives the same outcome
  std::array<double, 2> second_stats{};   // X = 1 outcome distribution
  std::vector<SteeredState> consistent;   // Bob (Y, y) compatible with every possible record
};

struct SignallingTrace {
  std::vector<std::string> steps;
  SequentialRun run_y0;  // Bob chose Y = 0, y = 0
  SequentialRun run_y1;  // Bob chose Y = 1, y = 0
  std::optional<SteeredState> inferred;  // unique inference in the Y = 1 run
  bool signalling = false;
};

/// Sequential-measurement argument under a given post-measurement model.
/// With no transition the post-state is undisturbed, so X = 1 follows the
/// box rule for the original steered state. With a transition, the X = 1
/// statistics are t.p for either setting.
SignallingTrace signalling_demo(const std::optional<SequentialTransition>& disturbance);

/// signalling_demo() with the undisturbed post-state.
SignallingTrace no_disturbance_signalling_demo();

}  // namespace cohere
