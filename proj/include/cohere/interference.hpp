#pragma once

#include <vector>

#include "cohere/core.hpp"
#include "cohere/optimizer.hpp"

namespace cohere {

/// Per-path phases, canonicalised so that phases[0] == 0.
class PhaseConfig {
public:
  /// Subtracts phases[0] from every entry. Throws NonFinite / DimensionMismatch.
  static PhaseConfig from_phases(std::vector<double> phases);

  const std::vector<double>& phases() const { return phases_; }

  /// diag(exp(i phases)) expressed in the standard basis via basis a.
  ComplexMatrix shifter(const MeasurementBasis& a) const;

private:
  explicit PhaseConfig(std::vector<double> p) : phases_(std::move(p)) {}
  std::vector<double> phases_;
};

struct FringeSample {
  double phi = 0.0;
  double intensity = 0.0;
};

/// Probability of the + outcome after U_phi^dagger rho U_phi with
/// U_phi = exp(-i phi sigma_z / 2). Throws WrongDimension unless d == 2.
FringeSample qubit_fringe(const DensityMatrix& rho, double phi);

/// Closed-form fringe 1/2 + Re(rho_01 e^{i phi}).
double qubit_fringe_analytic(const DensityMatrix& rho, double phi);

struct FringeExtrema {
  double i_max = 0.0;
  double i_min = 0.0;
};

/// 1/2 +- |rho_01|.
FringeExtrema qubit_fringe_extrema(const DensityMatrix& rho);

/// (I_max - I_min) / (I_max + I_min) from the analytic extrema, after
/// checking that `samples` evenly spaced fringe samples stay inside them.
/// Throws WrongDimension (d != 2) or InvalidConfig (samples < 8).
double qubit_visibility(const DensityMatrix& rho, int samples);

/// Statistics of the final measurement on U_Phi^dagger rho U_Phi.
RealVector phase_shifted_statistics(const DensityMatrix& rho, const MeasurementBasis& a,
                                    const PhaseConfig& phases, const MeasurementBasis& final);

/// 1/2 sup over two phase configurations of the L1 distance between the
/// final-measurement statistics. Phases are diagonal in basis a.
double generalized_visibility(const DensityMatrix& rho, const MeasurementBasis& a,
                              const MeasurementBasis& final, const OptimizerConfig& cfg);

struct VisibilityBound {
  double v = 0.0;
  double bound = 0.0;  // 2 * MOD-K
  bool ok = false;
};

VisibilityBound check_visibility_bound(const DensityMatrix& rho, const MeasurementBasis& a,
                                       const MeasurementBasis& final,
                                       const OptimizerConfig& cfg);

}  // namespace cohere
