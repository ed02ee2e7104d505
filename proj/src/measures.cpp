#include "cohere/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cohere {

namespace {

void require_same_dim(const DensityMatrix& rho, const MeasurementBasis& a) {
  if (rho.dim() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
  }
}

}  // namespace

double coherence_ed(const DensityMatrix& rho, const MeasurementBasis& a) {
  require_same_dim(rho, a);
  const double diff = von_neumann_entropy(dephase(rho, a)) - von_neumann_entropy(rho);
  return std::max(diff, 0.0);
}

double coherence_mod_k(const DensityMatrix& rho, const MeasurementBasis& a) {
  require_same_dim(rho, a);
  const ComplexMatrix delta = rho.matrix() - dephase(rho, a).matrix();
  return 0.5 * trace_norm(0.5 * (delta + delta.adjoint()));
}

double quantum_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state dimensions differ");
  }
  const ComplexMatrix root = matrix_sqrt(rho.matrix());
  ComplexMatrix inner = root * sigma.matrix() * root;
  inner = (0.5 * (inner + inner.adjoint())).eval();
  const double f = matrix_sqrt(inner).trace().real();
  return std::clamp(f, 0.0, 1.0);
}

double coherence_mod_f(const DensityMatrix& rho, const MeasurementBasis& a) {
  require_same_dim(rho, a);
  return 1.0 - quantum_fidelity(rho, dephase(rho, a));
}

double qubit_coherence_bound(double p0, double p1) {
  if (!(p0 >= 0.0) || !(p1 >= 0.0) || std::abs(p0 + p1 - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "(" << p0 << ", " << p1 << ") is not a binary distribution";
    throw Error(ErrorCode::InvalidDistribution, os.str());
  }
  return std::sqrt(p0 * p1);
}

CoherenceReport coherence_report(const DensityMatrix& rho, const MeasurementBasis& a,
                                 std::string basis_label) {
  return CoherenceReport{coherence_ed(rho, a), coherence_mod_k(rho, a),
                         coherence_mod_f(rho, a), std::move(basis_label)};
}

}  // namespace cohere
