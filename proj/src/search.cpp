#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "cohere/error.hpp"
#include "cohere/optimizer.hpp"
#include "cohere/random.hpp"

namespace cohere {

namespace {

constexpr double kInitialStep = 0.5;

struct Tracker {
  const Objective* f;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_point;
  long evaluations = 0;
};

double trampoline(const gsl_vector* x, void* params) {
  auto* t = static_cast<Tracker*>(params);
  const std::span<const double> point(x->data, x->size);
  const double v = (*t->f)(point);
  ++t->evaluations;
  if (!std::isfinite(v)) return GSL_NAN;
  if (v < t->best) {
    t->best = v;
    t->best_point.assign(point.begin(), point.end());
  }
  return v;
}

struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};
struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};

void disable_gsl_abort() {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1 || max_iters < 1 || !(tol > 0.0) || !(tol < 1.0)) {
    throw Error(ErrorCode::InvalidConfig,
                "optimizer config needs restarts >= 1, max_iters >= 1, 0 < tol < 1");
  }
}

SearchResult minimize(const Objective& f, std::size_t n, const OptimizerConfig& cfg) {
  cfg.validate();
  disable_gsl_abort();

  SearchResult result;
  result.value = std::numeric_limits<double>::infinity();

  if (n == 0) {
    const double v = f({});
    if (!std::isfinite(v)) throw Error(ErrorCode::OptimizerFailure, "objective is not finite");
    result.value = v;
    result.finite_restarts = 1;
    result.evaluations = 1;
    return result;
  }

  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(n));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(n));
  gsl_vector_set_all(step.get(), kInitialStep);

  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng = derive_rng(cfg.seed, {static_cast<std::uint64_t>(r)});
    std::uniform_real_distribution<double> start(-std::numbers::pi, std::numbers::pi);
    for (std::size_t i = 0; i < n; ++i) gsl_vector_set(x.get(), i, start(rng));

    Tracker tracker;
    tracker.f = &f;
    gsl_multimin_function fn{&trampoline, n, &tracker};
    std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> m(
        gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n));

    if (gsl_multimin_fminimizer_set(m.get(), &fn, x.get(), step.get()) == GSL_SUCCESS) {
      for (int it = 0; it < cfg.max_iters; ++it) {
        if (gsl_multimin_fminimizer_iterate(m.get()) != GSL_SUCCESS) break;
        const double size = gsl_multimin_fminimizer_size(m.get());
        if (gsl_multimin_test_size(size, cfg.tol) == GSL_SUCCESS) break;
      }
    }

    result.evaluations += tracker.evaluations;
    if (std::isfinite(tracker.best)) {
      ++result.finite_restarts;
      if (tracker.best < result.value) {
        result.value = tracker.best;
        result.point = std::move(tracker.best_point);
      }
    }
  }

  if (result.finite_restarts == 0) {
    throw Error(ErrorCode::OptimizerFailure, "every restart produced a non-finite objective");
  }
  return result;
}

SearchResult maximize(const Objective& f, std::size_t n, const OptimizerConfig& cfg) {
  const Objective negated = [&f](std::span<const double> x) { return -f(x); };
  SearchResult r = minimize(negated, n, cfg);
  r.value = -r.value;
  return r;
}

}  // namespace cohere
