#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "cohere/measures.hpp"
#include "cohere/random.hpp"
#include "cohere/variational.hpp"
#include "test_support.hpp"

using namespace cohere;
using namespace cohere::testing;

namespace {

OutcomeDistribution dist(std::initializer_list<double> p) {
  RealVector v(static_cast<Eigen::Index>(p.size()));
  Eigen::Index i = 0;
  for (double x : p) v(i++) = x;
  return OutcomeDistribution::from_probs(v);
}

OptimizerConfig config(std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.seed = seed;
  return cfg;
}

const MeasurementBasis kZ = MeasurementBasis::computational(2);

}  // namespace

TEST_SUITE("statistics and distances") {
  TEST_CASE("measure_statistics examples") {
    const DensityMatrix zero = qubit_state(1.0, 0.0);
    const auto p0 = measure_statistics(zero, kZ);
    CHECK(p0[0] == 1.0);
    CHECK(p0[1] == 0.0);

    const auto pp = measure_statistics(plus_state(), kZ);
    CHECK(pp[0] == doctest::Approx(0.5));
    CHECK(pp[1] == doctest::Approx(0.5));

    Rng rng = derive_rng(31);
    for (int d = 2; d <= 4; ++d) {
      const auto p = measure_statistics(DensityMatrix::maximally_mixed(d), random_basis(d, rng));
      for (int i = 0; i < d; ++i) CHECK(std::abs(p[i] - 1.0 / d) <= 1e-14);
    }
  }

  TEST_CASE("distribution validation") {
    CHECK_ERROR_CODE(dist({0.6, 0.6}), ErrorCode::InvalidDistribution);
    CHECK_ERROR_CODE(dist({1.1, -0.1}), ErrorCode::InvalidDistribution);
    const auto clipped = dist({1.0 + 5e-13, -5e-13});
    CHECK(clipped[0] == 1.0);
    CHECK(clipped[1] == 0.0);
  }

  TEST_CASE("kolmogorov_distance examples") {
    CHECK(kolmogorov_distance(dist({0.3, 0.7}), dist({0.3, 0.7})) == 0.0);
    CHECK(kolmogorov_distance(dist({1.0, 0.0}), dist({0.0, 1.0})) == 1.0);
    CHECK(kolmogorov_distance(dist({0.5, 0.5}), dist({0.8, 0.2})) ==
          doctest::Approx(0.3).epsilon(1e-15));
    CHECK_ERROR_CODE(kolmogorov_distance(dist({1.0}), dist({0.5, 0.5})), ErrorCode::LengthMismatch);
  }

  TEST_CASE("classical_fidelity examples") {
    CHECK(classical_fidelity(dist({0.3, 0.7}), dist({0.3, 0.7})) == doctest::Approx(1.0));
    CHECK(classical_fidelity(dist({1.0, 0.0}), dist({0.0, 1.0})) == 0.0);
    CHECK(classical_fidelity(dist({0.5, 0.5}), dist({0.8, 0.2})) ==
          doctest::Approx(0.9486832980505138).epsilon(1e-15));
    CHECK_ERROR_CODE(classical_fidelity(dist({1.0}), dist({0.5, 0.5})), ErrorCode::LengthMismatch);
  }

  TEST_CASE("kolmogorov is a metric, fidelity is symmetric and maximal only at equality") {
    Rng rng = derive_rng(32);
    for (int trial = 0; trial < 200; ++trial) {
      const int d = 2 + trial % 3;
      const auto p = OutcomeDistribution::from_probs(random_simplex_point(d, rng));
      const auto q = OutcomeDistribution::from_probs(random_simplex_point(d, rng));
      const auto r = OutcomeDistribution::from_probs(random_simplex_point(d, rng));
      CHECK(kolmogorov_distance(p, q) == kolmogorov_distance(q, p));
      CHECK(kolmogorov_distance(p, r) <= kolmogorov_distance(p, q) + kolmogorov_distance(q, r) + 1e-15);
      CHECK(kolmogorov_distance(p, q) > 0.0);
      CHECK(classical_fidelity(p, q) == doctest::Approx(classical_fidelity(q, p)).epsilon(1e-15));
      CHECK(classical_fidelity(p, q) < 1.0 - 1e-12);
      CHECK(std::abs(classical_fidelity(p, p) - 1.0) <= 1e-14);
    }
  }
}

TEST_SUITE("basis_from_params") {
  TEST_CASE("zero parameters give the identity") {
    for (int d = 1; d <= 4; ++d) {
      const std::vector<double> theta(static_cast<std::size_t>(d * d), 0.0);
      CHECK(max_abs(basis_from_params(theta, d).matrix() - ComplexMatrix::Identity(d, d)) <= 1e-15);
    }
  }

  TEST_CASE("(pi/4) sigma_y rotates to the +/- basis") {
    // H(0,1) = -i pi/4, i.e. (re, im) = (0, -pi/4).
    const std::vector<double> theta{0.0, 0.0, 0.0, -std::numbers::pi / 4};
    const ComplexMatrix u = basis_from_params(theta, 2).matrix();
    const double s = 1.0 / std::sqrt(2.0);
    // exp(i pi/4 sigma_y) = [[s, s], [-s, s]]: columns |->, |+>.
    CHECK(max_abs(u - qubit(s, s, -s, s)) <= 1e-10);
  }

  TEST_CASE("random parameters give unitaries") {
    Rng rng = derive_rng(33);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + trial % 3;
      std::vector<double> theta(static_cast<std::size_t>(d * d));
      for (auto& t : theta) t = angle(rng);
      const ComplexMatrix u = basis_from_params(theta, d).matrix();
      CHECK(max_abs(u.adjoint() * u - ComplexMatrix::Identity(d, d)) <= 1e-10);
    }
  }

  TEST_CASE("wrong parameter count") {
    const std::vector<double> theta(5, 0.0);
    CHECK_ERROR_CODE(basis_from_params(theta, 2), ErrorCode::BadParamLength);
  }
}

TEST_SUITE("optimizer") {
  TEST_CASE("finds the minimum of a shifted quadratic") {
    const Objective bowl = [](std::span<const double> x) {
      return (x[0] - 0.3) * (x[0] - 0.3) + (x[1] + 1.1) * (x[1] + 1.1) + 2.0;
    };
    const SearchResult r = minimize(bowl, 2, config(1));
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(r.point[0] == doctest::Approx(0.3).epsilon(1e-3));
    CHECK(r.finite_restarts == 20);
  }

  TEST_CASE("all non-finite restarts is a failure") {
    const Objective broken = [](std::span<const double>) { return NAN; };
    CHECK_ERROR_CODE(minimize(broken, 3, config(1)), ErrorCode::OptimizerFailure);
  }

  TEST_CASE("config validation") {
    OptimizerConfig cfg;
    cfg.restarts = 0;
    CHECK_ERROR_CODE(cfg.validate(), ErrorCode::InvalidConfig);
    cfg = OptimizerConfig{};
    cfg.tol = 1.0;
    CHECK_ERROR_CODE(cfg.validate(), ErrorCode::InvalidConfig);
  }
}

TEST_SUITE("variational measures") {
  TEST_CASE("MOD-K examples") {
    CHECK(std::abs(variational_mod_k(plus_state(), kZ, config(1)) - 0.5) <= 1e-3);
    CHECK(variational_mod_k(qubit_state(0.2, 0.0), kZ, config(1)) <= 1e-9);

    Rng rng = derive_rng(41);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = random_density_matrix(3, rng);
      const MeasurementBasis a = random_basis(3, rng);
      const double closed = coherence_mod_k(rho, a);
      CHECK(std::abs(variational_mod_k(rho, a, config(trial)) - closed) <= 1e-3);
    }
  }

  TEST_CASE("MOD-F examples") {
    CHECK(variational_mod_f(qubit_state(0.2, 0.0), kZ, config(1)) <= 1e-9);

    const DensityMatrix mixed = qubit_state(0.5, 0.9 * 0.5);  // 0.9|+><+| + 0.1 I/2
    CHECK(std::abs(variational_mod_f(mixed, kZ, config(2)) - coherence_mod_f(mixed, kZ)) <= 1e-3);

    Rng rng = derive_rng(42);
    for (int trial = 0; trial < 10; ++trial) {
      const DensityMatrix rho = random_density_matrix(2, rng);
      const MeasurementBasis a = random_basis(2, rng);
      const double closed = coherence_mod_f(regularize_for_fidelity_search(rho), a);
      CHECK(std::abs(variational_mod_f(rho, a, config(trial)) - closed) <= 1e-3);
    }
  }

  TEST_CASE("closed MOD-F matches the variational infimum on full-rank states") {
    Rng rng = derive_rng(43);
    for (int trial = 0; trial < 5; ++trial) {
      const int d = 2 + trial % 2;
      const DensityMatrix rho = random_density_matrix(d, rng);
      const MeasurementBasis a = random_basis(d, rng);
      CHECK(std::abs(coherence_mod_f(rho, a) - variational_mod_f(rho, a, config(trial))) <= 1e-3);
    }
  }

  TEST_CASE("singular inputs are mixed before the fidelity search") {
    const DensityMatrix pure = plus_state();
    const DensityMatrix reg = regularize_for_fidelity_search(pure);
    CHECK(max_abs(reg.matrix() - pure.matrix()) == doctest::Approx(kFidelityMixing / 2.0));
    const DensityMatrix full = DensityMatrix::maximally_mixed(2);
    CHECK(max_abs(regularize_for_fidelity_search(full).matrix() - full.matrix()) == 0.0);
  }

  TEST_CASE("measurement entropy examples") {
    Rng rng = derive_rng(44);
    CHECK(measurement_entropy(random_pure_state(2, rng), config(1)) <= 1e-6);
    CHECK(std::abs(measurement_entropy(DensityMatrix::maximally_mixed(2), config(1)) - 1.0) <= 1e-9);
    for (int trial = 0; trial < 3; ++trial) {
      const DensityMatrix rho = random_density_matrix(3, rng);
      const double s = measurement_entropy(rho, config(trial));
      CHECK(std::abs(s - von_neumann_entropy(rho)) <= 1e-3);
      CHECK(s >= von_neumann_entropy(rho) - 1e-9);
    }
  }

  TEST_CASE("ED examples") {
    CHECK(std::abs(variational_ed(plus_state(), kZ, config(1)) - 1.0) <= 2e-3);
    CHECK(variational_ed(qubit_state(0.3, 0.0), kZ, config(1)) <= 2e-3);
    Rng rng = derive_rng(45);
    for (int trial = 0; trial < 5; ++trial) {
      const DensityMatrix rho = random_density_matrix(2, rng);
      const MeasurementBasis a = random_basis(2, rng);
      CHECK(std::abs(variational_ed(rho, a, config(trial)) - coherence_ed(rho, a)) <= 2e-3);
    }
  }

  TEST_CASE("every candidate basis respects the closed forms") {
    Rng rng = derive_rng(46);
    for (int trial = 0; trial < 6; ++trial) {
      const int d = 2 + trial % 3;
      const DensityMatrix rho = random_density_matrix(d, rng);
      const MeasurementBasis a = random_basis(d, rng);
      OptimizerConfig cfg = config(trial);
      cfg.restarts = 3;

      const double closed_k = coherence_mod_k(rho, a);
      double worst_k = 0.0;
      long count = 0;
      variational_mod_k(rho, a, cfg, [&](double v) {
        worst_k = std::max(worst_k, v - closed_k);
        ++count;
      });
      CHECK(count > 0);
      CHECK(worst_k <= 1e-12);

      const DensityMatrix reg = regularize_for_fidelity_search(rho);
      const double fq = quantum_fidelity(reg, dephase(reg, a));
      double worst_f = 0.0;
      variational_mod_f(rho, a, cfg, [&](double v) { worst_f = std::max(worst_f, fq - v); });
      CHECK(worst_f <= 1e-12);
    }
  }

  TEST_CASE("same seed reproduces results bit for bit") {
    Rng rng = derive_rng(47);
    const DensityMatrix rho = random_density_matrix(3, rng);
    const MeasurementBasis a = random_basis(3, rng);
    OptimizerConfig cfg = config(99);
    cfg.restarts = 4;
    CHECK(variational_mod_k(rho, a, cfg) == variational_mod_k(rho, a, cfg));
    CHECK(variational_mod_f(rho, a, cfg) == variational_mod_f(rho, a, cfg));
    CHECK(measurement_entropy(rho, cfg) == measurement_entropy(rho, cfg));
  }
}
