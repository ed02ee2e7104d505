#include "cohere/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cohere/channels.hpp"
#include "cohere/core.hpp"
#include "cohere/interference.hpp"
#include "cohere/measures.hpp"
#include "cohere/prbox.hpp"
#include "cohere/random.hpp"
#include "cohere/variational.hpp"

namespace cohere {

namespace {

// Stream tags keep the suites' random draws independent of each other.
enum SuiteTag : std::uint64_t {
  kClosedTag = 1,
  kMonotonicityTag = 2,
  kAdditivityTag = 3,
  kVisibilityTag = 4,
};

class Accumulator {
public:
  void add(double v) {
    ++count_;
    min_ = std::min(min_, v);
    max_ = std::max(max_, v);
    sum_ += v;
  }

  Observation finish(std::string check, int dim) const {
    Observation o{std::move(check), dim, count_, 0.0, 0.0, 0.0};
    if (count_ > 0) {
      o.min = min_;
      o.max = max_;
      o.mean = sum_ / count_;
    }
    return o;
  }

private:
  int count_ = 0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

void add_record(SuiteReport& rep, std::string check, int dim, int trial, double value,
                double reference, double violation, double tolerance) {
  rep.records.push_back(
      CheckRecord{std::move(check), dim, trial, value, reference, violation, tolerance});
}

double positive_part(double x) { return std::max(x, 0.0); }

OptimizerConfig trial_config(Rng& rng) {
  OptimizerConfig cfg;
  cfg.seed = rng();
  return cfg;
}

void closed_vs_variational(const SuiteOptions& opts, SuiteReport& rep) {
  const double tol = opts.tol.value_or(1e-3);
  const int trials = opts.trials.value_or(100);
  for (int d : opts.dims) {
    Accumulator ordering;
    for (int t = 0; t < trials; ++t) {
      Rng rng = derive_rng(opts.seed, {kClosedTag, static_cast<std::uint64_t>(d),
                                       static_cast<std::uint64_t>(t)});
      const DensityMatrix rho = random_density_matrix(d, rng);
      const MeasurementBasis a = random_basis(d, rng);
      const OptimizerConfig cfg = trial_config(rng);

      const double closed_k = coherence_mod_k(rho, a);
      double worst_candidate = -std::numeric_limits<double>::infinity();
      const double var_k = variational_mod_k(
          rho, a, cfg, [&](double v) { worst_candidate = std::max(worst_candidate, v); });
      add_record(rep, "mod-k", d, t, var_k, closed_k, std::abs(var_k - closed_k), tol);
      add_record(rep, "mod-k-candidates", d, t, worst_candidate, closed_k,
                 positive_part(worst_candidate - closed_k), 1e-12);

      const DensityMatrix reg = regularize_for_fidelity_search(rho);
      const double closed_f = coherence_mod_f(reg, a);
      const double var_f = variational_mod_f(rho, a, cfg);
      add_record(rep, "mod-f", d, t, var_f, closed_f, std::abs(var_f - closed_f), tol);

      const EntropyPair ent = variational_ed_terms(rho, a, cfg);
      const double var_ed = std::abs(ent.state - ent.dephased);
      const double closed_ed = coherence_ed(rho, a);
      add_record(rep, "ed", d, t, var_ed, closed_ed, std::abs(var_ed - closed_ed), tol);

      const double vn = von_neumann_entropy(rho);
      add_record(rep, "measurement-entropy", d, t, ent.state, vn, std::abs(ent.state - vn), tol);

      ordering.add(coherence_mod_f(rho, a) - closed_k);
    }
    rep.observations.push_back(ordering.finish("mod-f-minus-mod-k", d));
    rep.trials += trials;
  }
}

void monotonicity(const SuiteOptions& opts, SuiteReport& rep) {
  const double tol = opts.tol.value_or(1e-9);
  const int trials = opts.trials.value_or(200);
  for (int d : opts.dims) {
    Accumulator mod_f_increase, ed_increase;
    for (int t = 0; t < trials; ++t) {
      Rng rng = derive_rng(opts.seed, {kMonotonicityTag, static_cast<std::uint64_t>(d),
                                       static_cast<std::uint64_t>(t)});
      // Alternate mixed and pure inputs so both regimes are swept.
      const DensityMatrix rho = (t % 2 == 0) ? random_density_matrix(d, rng)
                                             : random_pure_state(d, rng);
      const MeasurementBasis a = random_basis(d, rng);
      const Channel ch = random_dio(d, a, rng());

      const double defect = dephasing_covariance_defect(ch, a);
      add_record(rep, "dio-commutation", d, t, defect, 0.0, defect, 1e-9);

      const MonotonicityCheck m = check_monotonicity(rho, ch, a);
      add_record(rep, "mod-k-monotone", d, t, m.after, m.before, positive_part(m.after - m.before),
                 tol);

      const DensityMatrix out = apply_channel(ch, rho);
      mod_f_increase.add(coherence_mod_f(out, a) - coherence_mod_f(rho, a));
      ed_increase.add(coherence_ed(out, a) - coherence_ed(rho, a));

      // Contraction of the trace distance under a generic channel.
      const DensityMatrix other = random_density_matrix(d, rng);
      const Channel generic = random_channel(d, 1 + static_cast<int>(rng() % 3), rng());
      const double before = trace_norm(rho.matrix() - other.matrix());
      const double after =
          trace_norm(apply_channel(generic, rho).matrix() - apply_channel(generic, other).matrix());
      add_record(rep, "trace-distance-contraction", d, t, after, before,
                 positive_part(after - before), 1e-9);
    }
    rep.observations.push_back(mod_f_increase.finish("mod-f-increase", d));
    rep.observations.push_back(ed_increase.finish("ed-increase", d));
    rep.trials += trials;
  }
}

void additivity(const SuiteOptions& opts, SuiteReport& rep) {
  const double tol = opts.tol.value_or(1e-9);
  const int trials = opts.trials.value_or(100);
  Accumulator mod_f_dev, ed_dev;
  const auto n = static_cast<std::uint64_t>(opts.dims.size());
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(opts.seed, {kAdditivityTag, static_cast<std::uint64_t>(t)});
    const int d1 = opts.dims[rng() % n];
    const int d2 = opts.dims[rng() % n];
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double p1 = unit(rng);
    const double p2 = 1.0 - p1;
    const DensityMatrix rho1 = random_density_matrix(d1, rng);
    const DensityMatrix rho2 = random_density_matrix(d2, rng);
    const DensityMatrix sum = direct_sum(p1, rho1, p2, rho2);

    const auto a1 = MeasurementBasis::computational(d1);
    const auto a2 = MeasurementBasis::computational(d2);
    const auto a = MeasurementBasis::computational(d1 + d2);

    const double lhs = coherence_mod_k(sum, a);
    const double rhs = p1 * coherence_mod_k(rho1, a1) + p2 * coherence_mod_k(rho2, a2);
    add_record(rep, "mod-k-additivity", d1 + d2, t, lhs, rhs, std::abs(lhs - rhs), tol);

    mod_f_dev.add(coherence_mod_f(sum, a) -
                  (p1 * coherence_mod_f(rho1, a1) + p2 * coherence_mod_f(rho2, a2)));
    ed_dev.add(coherence_ed(sum, a) - (p1 * coherence_ed(rho1, a1) + p2 * coherence_ed(rho2, a2)));
  }
  rep.observations.push_back(mod_f_dev.finish("mod-f-additivity-deviation", 0));
  rep.observations.push_back(ed_dev.finish("ed-additivity-deviation", 0));
  rep.trials += trials;
}

void visibility_bound(const SuiteOptions& opts, SuiteReport& rep) {
  const double tol = opts.tol.value_or(1e-9);
  const int trials = opts.trials.value_or(100);
  for (int d : opts.dims) {
    Accumulator gap;
    for (int t = 0; t < trials; ++t) {
      Rng rng = derive_rng(opts.seed, {kVisibilityTag, static_cast<std::uint64_t>(d),
                                       static_cast<std::uint64_t>(t)});
      const DensityMatrix rho = random_density_matrix(d, rng);
      const MeasurementBasis a = random_basis(d, rng);
      const MeasurementBasis final = random_basis(d, rng);
      const OptimizerConfig cfg = trial_config(rng);

      const VisibilityBound b = check_visibility_bound(rho, a, final, cfg);
      add_record(rep, "visibility-bound", d, t, b.v, b.bound, positive_part(b.v - b.bound), tol);
      gap.add(b.bound - b.v);
    }
    rep.observations.push_back(gap.finish("bound-minus-visibility", d));
    rep.trials += trials;
  }
}

void prbox_gap(const SuiteOptions& opts, SuiteReport& rep) {
  const double tol = opts.tol.value_or(1e-12);
  double smallest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < opts.grid; ++i) {
    const double p0 = static_cast<double>(i) / (opts.grid - 1);
    const auto t = SequentialTransition::from_probs(p0, 1.0 - p0);
    const double sum = pr_gap_sum(t);
    smallest = std::min(smallest, sum);
    add_record(rep, "gap-sum", 2, i, sum, 1.0, std::abs(sum - 1.0), tol);
  }
  const double quantum = quantum_counterpart_sum({1.0, 0.0}, {1.0, 0.0});
  add_record(rep, "quantum-counterpart", 2, 0, quantum, 0.0, std::abs(quantum), 0.0);
  const double gap = smallest - quantum;
  add_record(rep, "gap", 2, 0, gap, 1.0, std::abs(gap - 1.0), tol);
  rep.trials += opts.grid;
}

void run_one(const std::string& name, const SuiteOptions& opts, SuiteReport& rep) {
  if (name == "closed-vs-variational") {
    closed_vs_variational(opts, rep);
  } else if (name == "monotonicity") {
    monotonicity(opts, rep);
  } else if (name == "additivity") {
    additivity(opts, rep);
  } else if (name == "visibility-bound") {
    SuiteOptions narrowed = opts;
    std::erase_if(narrowed.dims, [](int d) { return d > 3; });
    visibility_bound(narrowed, rep);
  } else if (name == "prbox-gap") {
    prbox_gap(opts, rep);
  }
}

}  // namespace

void SuiteOptions::validate() const {
  const auto& names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
    throw Error(ErrorCode::InvalidConfig, "unknown suite '" + suite + "'");
  }
  if (dims.empty()) throw Error(ErrorCode::InvalidConfig, "dims must not be empty");
  for (int d : dims) {
    if (d < 2 || d > 4) throw Error(ErrorCode::InvalidConfig, "dims must be drawn from {2,3,4}");
  }
  if (suite == "visibility-bound" && std::none_of(dims.begin(), dims.end(), [](int d) { return d <= 3; })) {
    throw Error(ErrorCode::InvalidConfig, "visibility-bound runs at d in {2,3}");
  }
  if (trials && *trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
  if (tol && !(*tol >= 0.0)) throw Error(ErrorCode::InvalidConfig, "tol must be >= 0");
  if (grid < 2) throw Error(ErrorCode::InvalidConfig, "grid must be >= 2");
}

SuiteReport run_suite(const SuiteOptions& opts) {
  opts.validate();
  SuiteReport rep;
  rep.suite = opts.suite;
  rep.seed = opts.seed;

  if (opts.suite == "all") {
    for (const auto& name : suite_names()) {
      SuiteReport part;
      run_one(name, opts, part);
      for (auto& r : part.records) {
        r.check = name + "/" + r.check;
        rep.records.push_back(std::move(r));
      }
      for (auto& o : part.observations) {
        o.check = name + "/" + o.check;
        rep.observations.push_back(std::move(o));
      }
      rep.trials += part.trials;
    }
  } else {
    run_one(opts.suite, opts, rep);
  }

  for (const auto& r : rep.records) {
    if (r.failed()) ++rep.failures;
    rep.worst_violation = std::max(rep.worst_violation, r.violation);
  }
  return rep;
}

nlohmann::ordered_json SuiteReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["trials"] = trials;
  j["failures"] = failures;
  j["worst_violation"] = worst_violation;
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    recs.push_back({{"check", r.check},
                    {"dim", r.dim},
                    {"trial", r.trial},
                    {"value", r.value},
                    {"reference", r.reference},
                    {"violation", r.violation},
                    {"tolerance", r.tolerance},
                    {"pass", !r.failed()}});
  }
  auto& obs = j["observations"] = nlohmann::ordered_json::array();
  for (const auto& o : observations) {
    obs.push_back({{"check", o.check},
                   {"dim", o.dim},
                   {"count", o.count},
                   {"min", o.min},
                   {"max", o.max},
                   {"mean", o.mean}});
  }
  return j;
}

}  // namespace cohere
