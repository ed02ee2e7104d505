#include "cohere/interference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cohere/measures.hpp"

namespace cohere {

namespace {

void require_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw Error(ErrorCode::WrongDimension, "fringe requires a qubit state");
}

RealVector born(const ComplexMatrix& rho, const ComplexMatrix& u) {
  return u.conjugate().cwiseProduct(rho * u).colwise().sum().real().transpose();
}

}  // namespace

PhaseConfig PhaseConfig::from_phases(std::vector<double> phases) {
  if (phases.empty() || static_cast<int>(phases.size()) > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch, "phase vector must have 1..16 entries");
  }
  for (double p : phases) {
    if (!std::isfinite(p)) throw Error(ErrorCode::NonFinite, "phase is not finite");
  }
  const double global = phases.front();
  for (double& p : phases) p -= global;
  return PhaseConfig(std::move(phases));
}

ComplexMatrix PhaseConfig::shifter(const MeasurementBasis& a) const {
  const int d = a.dim();
  if (static_cast<int>(phases_.size()) != d) {
    throw Error(ErrorCode::DimensionMismatch, "phase count differs from basis dimension");
  }
  Eigen::VectorXcd diag(d);
  for (int i = 0; i < d; ++i) diag(i) = std::polar(1.0, phases_[i]);
  return a.matrix() * diag.asDiagonal() * a.matrix().adjoint();
}

FringeSample qubit_fringe(const DensityMatrix& rho, double phi) {
  require_qubit(rho);
  ComplexMatrix u = ComplexMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, -phi / 2.0);
  u(1, 1) = std::polar(1.0, phi / 2.0);
  const ComplexMatrix shifted = u.adjoint() * rho.matrix() * u;
  const ComplexMatrix plus = ComplexMatrix::Constant(2, 2, 0.5);
  return FringeSample{phi, (shifted * plus).trace().real()};
}

double qubit_fringe_analytic(const DensityMatrix& rho, double phi) {
  require_qubit(rho);
  return 0.5 + (rho.matrix()(0, 1) * std::polar(1.0, phi)).real();
}

FringeExtrema qubit_fringe_extrema(const DensityMatrix& rho) {
  require_qubit(rho);
  const double c = std::abs(rho.matrix()(0, 1));
  return FringeExtrema{0.5 + c, 0.5 - c};
}

double qubit_visibility(const DensityMatrix& rho, int samples) {
  require_qubit(rho);
  if (samples < 8) throw Error(ErrorCode::InvalidConfig, "need at least 8 fringe samples");
  const FringeExtrema ext = qubit_fringe_extrema(rho);
  for (int k = 0; k < samples; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / samples;
    const double i = qubit_fringe(rho, phi).intensity;
    if (i > ext.i_max + 1e-12 || i < ext.i_min - 1e-12) {
      throw std::logic_error("fringe sample escapes its analytic envelope");
    }
  }
  return (ext.i_max - ext.i_min) / (ext.i_max + ext.i_min);
}

RealVector phase_shifted_statistics(const DensityMatrix& rho, const MeasurementBasis& a,
                                    const PhaseConfig& phases, const MeasurementBasis& final) {
  if (rho.dim() != a.dim() || rho.dim() != final.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
  }
  const ComplexMatrix u = phases.shifter(a);
  const ComplexMatrix shifted = u.adjoint() * rho.matrix() * u;
  return born(shifted, final.matrix());
}

double generalized_visibility(const DensityMatrix& rho, const MeasurementBasis& a,
                              const MeasurementBasis& final, const OptimizerConfig& cfg) {
  if (rho.dim() != a.dim() || rho.dim() != final.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "state and basis dimensions differ");
  }
  const int d = rho.dim();
  const std::size_t free = static_cast<std::size_t>(d - 1);

  // Fold the final measurement into the state once: p_i = <f_i|U^dag rho U|f_i>.
  const ComplexMatrix& au = a.matrix();
  const ComplexMatrix rho_a = au.adjoint() * rho.matrix() * au;
  const ComplexMatrix final_a = au.adjoint() * final.matrix();

  auto stats = [&](std::span<const double> free_phases) {
    Eigen::VectorXcd diag(d);
    diag(0) = 1.0;
    for (int i = 1; i < d; ++i) diag(i) = std::polar(1.0, free_phases[i - 1]);
    const ComplexMatrix w = diag.asDiagonal() * final_a;
    return born(rho_a, w);
  };

  const Objective distance = [&](std::span<const double> x) {
    const RealVector p = stats(x.subspan(0, free));
    const RealVector q = stats(x.subspan(free, free));
    return 0.5 * (p - q).cwiseAbs().sum();
  };
  return std::clamp(maximize(distance, 2 * free, cfg).value, 0.0, 1.0);
}

VisibilityBound check_visibility_bound(const DensityMatrix& rho, const MeasurementBasis& a,
                                       const MeasurementBasis& final,
                                       const OptimizerConfig& cfg) {
  VisibilityBound r;
  r.v = generalized_visibility(rho, a, final, cfg);
  r.bound = 2.0 * coherence_mod_k(rho, a);
  r.ok = r.v <= r.bound + 1e-9;
  return r;
}

}  // namespace cohere
