#include <cmath>

#include <doctest.h>

#include "cohere/core.hpp"
#include "cohere/random.hpp"
#include "test_support.hpp"

using namespace cohere;
using namespace cohere::testing;

TEST_SUITE("eigh") {
  TEST_CASE("antidiagonal qubit has eigenvalues -1/2 and +1/2") {
    const Spectrum s = eigh(qubit(0.0, 0.5, 0.5, 0.0));
    CHECK(s.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(s.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("identity over d has flat spectrum") {
    for (int d = 1; d <= 4; ++d) {
      const Spectrum s = eigh(ComplexMatrix::Identity(d, d) / static_cast<double>(d));
      for (int i = 0; i < d; ++i) CHECK(std::abs(s.eigenvalues(i) - 1.0 / d) < 1e-15);
    }
  }

  TEST_CASE("random Hermitian round trip") {
    Rng rng = derive_rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix g = ginibre(4, rng);
      const ComplexMatrix h = g + g.adjoint();
      const Spectrum s = eigh(h);
      const ComplexMatrix& v = s.eigenvectors.matrix();
      const ComplexMatrix rebuilt = v * s.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
      CHECK(max_abs(rebuilt - h) <= 1e-8);
      for (int i = 1; i < 4; ++i) CHECK(s.eigenvalues(i - 1) <= s.eigenvalues(i));
      CHECK(max_abs(v.adjoint() * v - ComplexMatrix::Identity(4, 4)) <= kUnitaryTol);
    }
  }

  TEST_CASE("rejects non-Hermitian input") {
    CHECK_ERROR_CODE(eigh(qubit(0.0, 1.0, 0.0, 0.0)), ErrorCode::NotHermitian);
  }
}

TEST_SUITE("types") {
  TEST_CASE("density matrix validation") {
    CHECK_ERROR_CODE(DensityMatrix::from_matrix(qubit(0.6, 0.0, 0.0, 0.6)),
                     ErrorCode::InvalidState);
    CHECK_ERROR_CODE(DensityMatrix::from_matrix(qubit(1.5, 0.0, 0.0, -0.5)), ErrorCode::NotPsd);
    CHECK_ERROR_CODE(DensityMatrix::from_matrix(qubit(0.5, 0.1, 0.2, 0.5)),
                     ErrorCode::NotHermitian);
    CHECK_ERROR_CODE(DensityMatrix::from_matrix(qubit(NAN, 0.0, 0.0, 0.5)), ErrorCode::NonFinite);
    CHECK_ERROR_CODE(DensityMatrix::from_matrix(ComplexMatrix::Zero(2, 3)),
                     ErrorCode::DimensionMismatch);
    // Eigenvalue drift inside the tolerance is accepted.
    CHECK_NOTHROW(DensityMatrix::from_matrix(qubit(1.0 + 5e-11, 0.0, 0.0, -5e-11)));
  }

  TEST_CASE("basis validation") {
    CHECK_ERROR_CODE(MeasurementBasis::from_matrix(qubit(1.0, 1.0, 0.0, 1.0)),
                     ErrorCode::NotUnitary);
    for (int d = 1; d <= 5; ++d) {
      CHECK_NOTHROW(MeasurementBasis::fourier(d));
    }
  }
}

TEST_SUITE("dephase") {
  TEST_CASE("plus state loses its off-diagonals") {
    const DensityMatrix out = dephase(plus_state(), MeasurementBasis::computational(2));
    CHECK(max_abs(out.matrix() - ComplexMatrix::Identity(2, 2) / 2.0) == 0.0);
  }

  TEST_CASE("states diagonal in the basis are fixed points") {
    Rng rng = derive_rng(3);
    for (int d = 2; d <= 4; ++d) {
      const MeasurementBasis a = random_basis(d, rng);
      const DensityMatrix rho = random_incoherent_state(a, rng);
      CHECK(max_abs(dephase(rho, a).matrix() - rho.matrix()) <= 1e-12);
    }
  }

  TEST_CASE("random states: diagonal in basis a, statistics preserved, idempotent") {
    Rng rng = derive_rng(4);
    for (int trial = 0; trial < 100; ++trial) {
      const int d = 2 + trial % 3;
      const DensityMatrix rho = random_density_matrix(d, rng);
      const MeasurementBasis a = random_basis(d, rng);
      const DensityMatrix out = dephase(rho, a);

      // Independent projector-sum route.
      CHECK(max_abs(out.matrix() - dephase_any(rho.matrix(), a)) <= 1e-12);
      CHECK(max_offdiagonal(out, a) <= 1e-12);
      CHECK((diagonal_in(out, a) - diagonal_in(rho, a)).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(max_abs(dephase(out, a).matrix() - out.matrix()) <= 1e-10);
    }
  }

  TEST_CASE("dimension mismatch") {
    CHECK_ERROR_CODE(dephase(plus_state(), MeasurementBasis::computational(3)),
                     ErrorCode::DimensionMismatch);
  }
}

TEST_SUITE("trace_norm") {
  TEST_CASE("examples") {
    CHECK(trace_norm(qubit(0.0, 0.5, 0.5, 0.0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(trace_norm(ComplexMatrix::Zero(3, 3)) == 0.0);
    const DensityMatrix diag = DensityMatrix::from_matrix(qubit(0.3, 0.0, 0.0, 0.7));
    const auto a = MeasurementBasis::computational(2);
    CHECK(trace_norm(diag.matrix() - dephase(diag, a).matrix()) == 0.0);
  }

  TEST_CASE("vanishes exactly when the states coincide") {
    Rng rng = derive_rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 2 + trial % 3;
      const DensityMatrix r1 = random_density_matrix(d, rng);
      const DensityMatrix r2 = random_density_matrix(d, rng);
      CHECK(trace_norm(r1.matrix() - r1.matrix()) <= 1e-9);
      CHECK(trace_norm(r1.matrix() - r2.matrix()) > 1e-9);
    }
  }
}

TEST_SUITE("matrix_sqrt") {
  TEST_CASE("identity and diagonal") {
    CHECK(max_abs(matrix_sqrt(ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(3, 3)) <=
          1e-15);
    const ComplexMatrix r = matrix_sqrt(qubit(4.0, 0.0, 0.0, 9.0));
    CHECK(max_abs(r - qubit(2.0, 0.0, 0.0, 3.0)) <= 1e-14);
  }

  TEST_CASE("random PSD round trip") {
    Rng rng = derive_rng(6);
    for (int trial = 0; trial < 50; ++trial) {
      const ComplexMatrix g = ginibre(2 + trial % 3, rng);
      const ComplexMatrix psd = g * g.adjoint();
      const ComplexMatrix root = matrix_sqrt(psd);
      CHECK(max_abs(root * root - psd) <= 1e-8);
      CHECK(hermitian_defect(root) <= 1e-14);
      CHECK(eigh(root).eigenvalues(0) >= -1e-12);
    }
  }

  TEST_CASE("clips tiny negative eigenvalues and rejects real negatives") {
    CHECK_NOTHROW(matrix_sqrt(qubit(1.0, 0.0, 0.0, -5e-11)));
    CHECK(matrix_sqrt(qubit(1.0, 0.0, 0.0, -5e-11))(1, 1) == Complex(0.0));
    CHECK_ERROR_CODE(matrix_sqrt(qubit(1.0, 0.0, 0.0, -1e-6)), ErrorCode::NotPsd);
  }
}

TEST_SUITE("von_neumann_entropy") {
  TEST_CASE("examples") {
    Rng rng = derive_rng(7);
    CHECK(von_neumann_entropy(random_pure_state(3, rng)) <= 1e-12);
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    const DensityMatrix rho = DensityMatrix::from_matrix(qubit(0.25, 0.0, 0.0, 0.75));
    CHECK(von_neumann_entropy(rho) == doctest::Approx(0.8112781244591328).epsilon(1e-14));
  }

  TEST_CASE("bounded by log2 d and never decreased by dephasing") {
    Rng rng = derive_rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      const int d = 2 + trial % 3;
      const DensityMatrix rho = random_density_matrix(d, rng);
      const MeasurementBasis a = random_basis(d, rng);
      const double s = von_neumann_entropy(rho);
      CHECK(s >= 0.0);
      CHECK(s <= std::log2(d) + 1e-12);
      CHECK(von_neumann_entropy(dephase(rho, a)) >= s - 1e-9);
    }
  }
}

TEST_CASE("seeded streams are reproducible and tag-sensitive") {
  Rng a = derive_rng(42, {1, 2});
  Rng b = derive_rng(42, {1, 2});
  Rng c = derive_rng(42, {2, 1});
  const auto first = a();
  CHECK(first == b());
  CHECK(first != c());
}
