#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

#include "cohere/error.hpp"

namespace cohere {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

// Validation tolerances shared by every module.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr int kMaxDim = 16;

/// Largest entrywise |m - m^dagger|.
double hermitian_defect(const ComplexMatrix& m);

bool all_finite(const ComplexMatrix& m);

/// A d x d orthonormal basis. Column i is the basis vector |i>.
class MeasurementBasis {
public:
  /// Throws NotUnitary / NonFinite / DimensionMismatch.
  static MeasurementBasis from_matrix(ComplexMatrix u);
  static MeasurementBasis computational(int dim);
  /// Discrete Fourier basis, column k has entries exp(2 pi i jk/d)/sqrt(d).
  static MeasurementBasis fourier(int dim);

  int dim() const { return static_cast<int>(u_.rows()); }
  const ComplexMatrix& matrix() const { return u_; }
  auto vector(int i) const { return u_.col(i); }

private:
  explicit MeasurementBasis(ComplexMatrix u) : u_(std::move(u)) {}
  ComplexMatrix u_;
};

/// Hermitian, unit-trace, positive semidefinite d x d matrix.
class DensityMatrix {
public:
  /// Validates the matrix and keeps it verbatim. Throws NonFinite,
  /// NotHermitian, InvalidState (trace) or NotPsd.
  static DensityMatrix from_matrix(ComplexMatrix m);
  static DensityMatrix maximally_mixed(int dim);
  /// |psi><psi| for a (not necessarily normalised) vector.
  static DensityMatrix pure(const Eigen::VectorXcd& psi);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

struct Spectrum {
  RealVector eigenvalues;  // ascending
  MeasurementBasis eigenvectors;
};

Spectrum eigh(const ComplexMatrix& m);

/// Complete dephasing in basis a: sum_i |i><i| rho |i><i|.
DensityMatrix dephase(const DensityMatrix& rho, const MeasurementBasis& a);

/// Matrix of m expressed in basis a, i.e. a^dagger m a.
ComplexMatrix in_basis(const ComplexMatrix& m, const MeasurementBasis& a);

/// Diagonal of rho in basis a as real numbers.
RealVector diagonal_in(const DensityMatrix& rho, const MeasurementBasis& a);

/// Largest |<i|rho|j>| with i != j, in basis a.
double max_offdiagonal(const DensityMatrix& rho, const MeasurementBasis& a);

/// Tr|m| for Hermitian m.
double trace_norm(const ComplexMatrix& m);

/// Principal square root of a PSD Hermitian matrix. Eigenvalues in
/// [-kPsdTol, 0) are treated as zero; anything more negative is NotPsd.
ComplexMatrix matrix_sqrt(const ComplexMatrix& m);

/// -Tr(rho log2 rho), in bits.
double von_neumann_entropy(const DensityMatrix& rho);

/// Shannon entropy in bits of a probability vector, with 0 log 0 = 0.
double shannon_entropy(const RealVector& p);

}  // namespace cohere
