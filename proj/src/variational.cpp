#include "cohere/variational.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cohere {

namespace {

std::size_t param_count(int dim) { return static_cast<std::size_t>(dim) * dim; }

ComplexMatrix unitary_from_params(std::span<const double> theta, int dim) {
  ComplexMatrix h(dim, dim);
  std::size_t k = 0;
  for (int i = 0; i < dim; ++i) h(i, i) = theta[k++];
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      h(i, j) = Complex(theta[k], theta[k + 1]);
      h(j, i) = std::conj(h(i, j));
      k += 2;
    }
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) phases(i) = std::polar(1.0, es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

// Raw Born-rule probabilities for the columns of u; no validation.
RealVector born(const ComplexMatrix& rho, const ComplexMatrix& u) {
  return u.conjugate().cwiseProduct(rho * u).colwise().sum().real().transpose();
}

double raw_kolmogorov(const RealVector& p, const RealVector& q) {
  return 0.5 * (p - q).cwiseAbs().sum();
}

double raw_fidelity(const RealVector& p, const RealVector& q) {
  return (p.cwiseMax(0.0).cwiseProduct(q.cwiseMax(0.0))).cwiseSqrt().sum();
}

void require_same_dim(const DensityMatrix& rho, const MeasurementBasis& a) {
  if (rho.dim() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
  }
}

void require_same_length(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::LengthMismatch, "distributions have different lengths");
  }
}

}  // namespace

OutcomeDistribution OutcomeDistribution::from_probs(RealVector probs) {
  if (probs.size() == 0 || !probs.allFinite()) {
    throw Error(ErrorCode::InvalidDistribution, "empty or non-finite distribution");
  }
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (probs(i) < -1e-12 || probs(i) > 1.0 + 1e-12) {
      std::ostringstream os;
      os << "entry " << i << " = " << probs(i) << " outside [0, 1]";
      throw Error(ErrorCode::InvalidDistribution, os.str());
    }
    probs(i) = std::clamp(probs(i), 0.0, 1.0);
  }
  if (std::abs(probs.sum() - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "entries sum to " << probs.sum();
    throw Error(ErrorCode::InvalidDistribution, os.str());
  }
  return OutcomeDistribution(std::move(probs));
}

OutcomeDistribution measure_statistics(const DensityMatrix& rho, const MeasurementBasis& b) {
  require_same_dim(rho, b);
  return OutcomeDistribution::from_probs(born(rho.matrix(), b.matrix()));
}

double kolmogorov_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  require_same_length(p, q);
  return std::min(raw_kolmogorov(p.probs(), q.probs()), 1.0);
}

double classical_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  require_same_length(p, q);
  return std::min(raw_fidelity(p.probs(), q.probs()), 1.0);
}

MeasurementBasis basis_from_params(std::span<const double> theta, int dim) {
  if (dim < 1 || dim > kMaxDim || theta.size() != param_count(dim)) {
    std::ostringstream os;
    os << "expected " << (dim > 0 ? param_count(dim) : 0) << " parameters for dim " << dim
       << ", got " << theta.size();
    throw Error(ErrorCode::BadParamLength, os.str());
  }
  return MeasurementBasis::from_matrix(unitary_from_params(theta, dim));
}

double variational_mod_k(const DensityMatrix& rho, const MeasurementBasis& a,
                         const OptimizerConfig& cfg, const CandidateObserver& observe) {
  require_same_dim(rho, a);
  const int d = rho.dim();
  const ComplexMatrix& state = rho.matrix();
  const ComplexMatrix dephased = dephase(rho, a).matrix();

  const Objective distance = [&](std::span<const double> theta) {
    const ComplexMatrix u = unitary_from_params(theta, d);
    const double v = raw_kolmogorov(born(state, u), born(dephased, u));
    if (observe) observe(v);
    return v;
  };
  return std::clamp(maximize(distance, param_count(d), cfg).value, 0.0, 1.0);
}

DensityMatrix regularize_for_fidelity_search(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) >= kFidelityMixing) return rho;
  const int d = rho.dim();
  ComplexMatrix mixed = (1.0 - kFidelityMixing) * rho.matrix() +
                        (kFidelityMixing / d) * ComplexMatrix::Identity(d, d);
  return DensityMatrix::from_matrix(std::move(mixed));
}

double variational_mod_f(const DensityMatrix& rho, const MeasurementBasis& a,
                         const OptimizerConfig& cfg, const CandidateObserver& observe) {
  require_same_dim(rho, a);
  const DensityMatrix input = regularize_for_fidelity_search(rho);
  const int d = input.dim();
  const ComplexMatrix& state = input.matrix();
  const ComplexMatrix dephased = dephase(input, a).matrix();

  const Objective fidelity = [&](std::span<const double> theta) {
    const ComplexMatrix u = unitary_from_params(theta, d);
    const double v = raw_fidelity(born(state, u), born(dephased, u));
    if (observe) observe(v);
    return v;
  };
  const double best = std::clamp(minimize(fidelity, param_count(d), cfg).value, 0.0, 1.0);
  return 1.0 - best;
}

double measurement_entropy(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  const int d = rho.dim();
  const ComplexMatrix& state = rho.matrix();
  const Objective entropy = [&](std::span<const double> theta) {
    return shannon_entropy(born(state, unitary_from_params(theta, d)).cwiseMax(0.0));
  };
  return std::max(minimize(entropy, param_count(d), cfg).value, 0.0);
}

EntropyPair variational_ed_terms(const DensityMatrix& rho, const MeasurementBasis& a,
                                 const OptimizerConfig& cfg) {
  require_same_dim(rho, a);
  return EntropyPair{measurement_entropy(rho, cfg), measurement_entropy(dephase(rho, a), cfg)};
}

double variational_ed(const DensityMatrix& rho, const MeasurementBasis& a,
                      const OptimizerConfig& cfg) {
  const EntropyPair e = variational_ed_terms(rho, a, cfg);
  return std::abs(e.state - e.dephased);
}

}  // namespace cohere
