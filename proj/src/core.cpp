#include "cohere/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace cohere {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPsd: return "NotPSD";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidDistribution: return "InvalidDistribution";
    case ErrorCode::BadParamLength: return "BadParamLength";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::OptimizerFailure: return "OptimizerFailure";
    case ErrorCode::TracePreservationViolated: return "TracePreservationViolated";
    case ErrorCode::NotDio: return "NotDio";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::UnsupportedState: return "UnsupportedState";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() < 1 || m.rows() > kMaxDim) {
    std::ostringstream os;
    os << what << " must be square with 1 <= dim <= " << kMaxDim << ", got " << m.rows()
       << "x" << m.cols();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
}

void require_hermitian(const ComplexMatrix& m) {
  if (!all_finite(m)) throw Error(ErrorCode::NonFinite, "matrix has NaN/Inf entries");
  const double defect = hermitian_defect(m);
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << "max |M - M^dagger| = " << defect;
    throw Error(ErrorCode::NotHermitian, os.str());
  }
}

}  // namespace

double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

// ---------------------------------------------------------------------------
// MeasurementBasis

MeasurementBasis MeasurementBasis::from_matrix(ComplexMatrix u) {
  require_square(u, "basis");
  if (!all_finite(u)) throw Error(ErrorCode::NonFinite, "basis has NaN/Inf entries");
  const auto n = u.rows();
  const double defect = (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTol) {
    std::ostringstream os;
    os << "max |U^dagger U - I| = " << defect;
    throw Error(ErrorCode::NotUnitary, os.str());
  }
  return MeasurementBasis(std::move(u));
}

MeasurementBasis MeasurementBasis::computational(int dim) {
  return from_matrix(ComplexMatrix::Identity(dim, dim));
}

MeasurementBasis MeasurementBasis::fourier(int dim) {
  ComplexMatrix f(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int j = 0; j < dim; ++j) {
    for (int k = 0; k < dim; ++k) {
      const double angle = 2.0 * std::numbers::pi * ((j * k) % dim) / dim;
      f(j, k) = std::polar(norm, angle);
    }
  }
  return from_matrix(std::move(f));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
  require_square(m, "density matrix");
  require_hermitian(m);
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "trace is " << trace << ", expected 1";
    throw Error(ErrorCode::InvalidState, os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  const double smallest = es.eigenvalues()(0);
  if (smallest < -kPsdTol) {
    std::ostringstream os;
    os << "smallest eigenvalue " << smallest;
    throw Error(ErrorCode::NotPsd, os.str());
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return from_matrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd& psi) {
  const double n = psi.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidState, "state vector has zero or non-finite norm");
  }
  const Eigen::VectorXcd v = psi / n;
  ComplexMatrix m = v * v.adjoint();
  // Exact Hermiticity; the outer product can be off by an ulp.
  m = (0.5 * (m + m.adjoint())).eval();
  return from_matrix(std::move(m));
}

// ---------------------------------------------------------------------------
// Linear algebra

Spectrum eigh(const ComplexMatrix& m) {
  require_square(m, "matrix");
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m);
  if (es.info() != Eigen::Success) {
    throw Error(ErrorCode::NonFinite, "eigendecomposition did not converge");
  }
  return Spectrum{es.eigenvalues(), MeasurementBasis::from_matrix(es.eigenvectors())};
}

ComplexMatrix in_basis(const ComplexMatrix& m, const MeasurementBasis& a) {
  if (m.rows() != a.dim() || m.cols() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix and basis dimensions differ");
  }
  return a.matrix().adjoint() * m * a.matrix();
}

RealVector diagonal_in(const DensityMatrix& rho, const MeasurementBasis& a) {
  return in_basis(rho.matrix(), a).diagonal().real();
}

double max_offdiagonal(const DensityMatrix& rho, const MeasurementBasis& a) {
  ComplexMatrix m = in_basis(rho.matrix(), a);
  m.diagonal().setZero();
  return m.cwiseAbs().maxCoeff();
}

DensityMatrix dephase(const DensityMatrix& rho, const MeasurementBasis& a) {
  if (rho.dim() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
  }
  const RealVector p = diagonal_in(rho, a);
  const ComplexMatrix& u = a.matrix();
  ComplexMatrix out = u * p.cast<Complex>().asDiagonal() * u.adjoint();
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix::from_matrix(std::move(out));
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "matrix");
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& m) {
  const Spectrum s = eigh(m);
  RealVector roots(s.eigenvalues.size());
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const double lambda = s.eigenvalues(i);
    if (lambda < -kPsdTol) {
      std::ostringstream os;
      os << "eigenvalue " << lambda << " below -" << kPsdTol;
      throw Error(ErrorCode::NotPsd, os.str());
    }
    roots(i) = std::sqrt(std::max(lambda, 0.0));
  }
  const ComplexMatrix& v = s.eigenvectors.matrix();
  ComplexMatrix out = v * roots.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

double shannon_entropy(const RealVector& p) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) h -= p(i) * std::log2(p(i));
  }
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  RealVector lambda = es.eigenvalues().cwiseMax(0.0);
  return std::clamp(shannon_entropy(lambda), 0.0, std::log2(static_cast<double>(rho.dim())));
}

}  // namespace cohere
