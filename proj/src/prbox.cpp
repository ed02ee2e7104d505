#include "cohere/prbox.hpp"

#include <cmath>
#include <sstream>

#include "cohere/error.hpp"
#include "cohere/measures.hpp"

namespace cohere {

namespace {

void require_bit(Bit b, const char* name) {
  if (b != 0 && b != 1) throw Error(ErrorCode::InvalidConfig, std::string(name) + " must be 0 or 1");
}

std::string describe(const SteeredState& s) {
  std::ostringstream os;
  os << "omega_{" << s.y_outcome << "|" << s.y_setting << "}";
  return os.str();
}

std::array<double, 2> point_mass(Bit b) { return b == 0 ? std::array{1.0, 0.0} : std::array{0.0, 1.0}; }

// X = 1 statistics on the post-state of (X = 0, outcome 0) prepared from s.
std::array<double, 2> second_measurement(const SteeredState& s,
                                         const std::optional<SequentialTransition>& disturbance) {
  if (disturbance) return disturbance->p;
  return point_mass(steered_outcome(s, 1));
}

SequentialRun run_sequence(const SteeredState& actual,
                           const std::optional<SequentialTransition>& disturbance) {
  SequentialRun run;
  run.actual = actual;
  run.first_outcome = steered_outcome(actual, 0);
  // Sharp measurements repeat: the post-state of (X = 0, x) yields x again.
  const SteeredState post = disturbance ? SteeredState{0, run.first_outcome} : actual;
  run.repeatable = steered_outcome(post, 0) == run.first_outcome;
  run.second_stats = second_measurement(actual, disturbance);

  for (Bit Y = 0; Y <= 1; ++Y) {
    for (Bit y = 0; y <= 1; ++y) {
      const SteeredState candidate{Y, y};
      if (steered_outcome(candidate, 0) != run.first_outcome) continue;
      const auto stats = second_measurement(candidate, disturbance);
      bool compatible = true;
      for (Bit b = 0; b <= 1; ++b) {
        if (run.second_stats[b] > 0.0 && stats[b] <= 0.0) compatible = false;
      }
      if (compatible) run.consistent.push_back(candidate);
    }
  }
  return run;
}

}  // namespace

JointTable pr_box_statistics(Bit X, Bit Y) {
  require_bit(X, "X");
  require_bit(Y, "Y");
  JointTable t{};
  for (Bit x = 0; x <= 1; ++x) {
    for (Bit y = 0; y <= 1; ++y) t[x][y] = (y == ((X & Y) ^ x)) ? 0.5 : 0.0;
  }
  return t;
}

Bit steered_outcome(const SteeredState& s, Bit X) {
  require_bit(X, "X");
  require_bit(s.y_setting, "Y");
  require_bit(s.y_outcome, "y");
  return (X & s.y_setting) ^ s.y_outcome;
}

SequentialTransition SequentialTransition::from_probs(double p0, double p1) {
  if (!(p0 >= 0.0 && p0 <= 1.0) || !(p1 >= 0.0 && p1 <= 1.0) ||
      std::abs(p0 + p1 - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidDistribution, "transition must be a binary distribution");
  }
  return SequentialTransition{{p0, p1}};
}

double pr_mod_k_lower_bound(const SteeredState& s, const SequentialTransition& t) {
  require_bit(s.y_setting, "Y");
  if (s.y_outcome != 0) {
    throw Error(ErrorCode::UnsupportedState, "lower bound is defined for omega_{0|Y} only");
  }
  const auto pre = point_mass(s.y_setting);
  return 0.5 * (std::abs(pre[0] - t.p[0]) + std::abs(pre[1] - t.p[1]));
}

double pr_gap_sum(const SequentialTransition& t) {
  return pr_mod_k_lower_bound({1, 0}, t) + pr_mod_k_lower_bound({0, 0}, t);
}

double quantum_counterpart_sum(const std::array<double, 2>& stats0,
                               const std::array<double, 2>& stats1) {
  return qubit_coherence_bound(stats0[0], stats0[1]) + qubit_coherence_bound(stats1[0], stats1[1]);
}

SignallingTrace signalling_demo(const std::optional<SequentialTransition>& disturbance) {
  SignallingTrace trace;
  auto& steps = trace.steps;

  steps.push_back(disturbance ? "model: post-measurement state disturbed, X=1 statistics (" +
                                    std::to_string(disturbance->p[0]) + ", " +
                                    std::to_string(disturbance->p[1]) + ")"
                              : "model: deterministic outcome leaves the state undisturbed");

  trace.run_y0 = run_sequence({0, 0}, disturbance);
  trace.run_y1 = run_sequence({1, 0}, disturbance);

  for (const SequentialRun* run : {&trace.run_y0, &trace.run_y1}) {
    std::ostringstream os;
    os << "Bob steers " << describe(run->actual) << "; Alice measures X=0 -> x="
       << run->first_outcome << (run->repeatable ? " (repeats on X=0)" : " (NOT repeatable)")
       << "; then X=1 -> P(x=0)=" << run->second_stats[0] << ", P(x=1)=" << run->second_stats[1]
       << "; consistent Bob records:";
    for (const auto& c : run->consistent) os << " {Y=" << c.y_setting << ",y=" << c.y_outcome << "}";
    steps.push_back(os.str());
  }

  if (trace.run_y1.consistent.size() == 1) trace.inferred = trace.run_y1.consistent.front();
  const bool unique = trace.run_y0.consistent.size() == 1 && trace.run_y1.consistent.size() == 1;
  trace.signalling = unique && trace.run_y0.second_stats != trace.run_y1.second_stats;

  if (trace.inferred) {
    std::ostringstream os;
    os << "Alice's records {X=0,x=" << trace.run_y1.first_outcome << "}, {X=1,x="
       << steered_outcome(trace.run_y1.actual, 1) << "} force {Y=" << trace.inferred->y_setting
       << ",y=" << trace.inferred->y_outcome << "}";
    steps.push_back(os.str());
  } else {
    steps.push_back("Alice's records are compatible with more than one Bob setting");
  }
  steps.push_back(trace.signalling
                      ? "Alice's local statistics reveal Bob's setting: signalling"
                      : "Alice's local statistics are independent of Bob's setting: no signalling");
  return trace;
}

SignallingTrace no_disturbance_signalling_demo() { return signalling_demo(std::nullopt); }

}  // namespace cohere
