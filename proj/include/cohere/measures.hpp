#pragma once

#include <string>

#include "cohere/core.hpp"

namespace cohere {

/// Relative entropy of coherence S(rho_A) - S(rho), in bits. Never negative.
double coherence_ed(const DensityMatrix& rho, const MeasurementBasis& a);

/// Half the trace distance between rho and its dephased counterpart.
double coherence_mod_k(const DensityMatrix& rho, const MeasurementBasis& a);

/// 1 - Tr sqrt(sqrt(rho) rho_A sqrt(rho)), using the square-root fidelity.
double coherence_mod_f(const DensityMatrix& rho, const MeasurementBasis& a);

/// Tr sqrt(sqrt(rho) sigma sqrt(rho)).
double quantum_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// sqrt(p0 p1): upper bound on a qubit's MOD-K coherence given the
/// statistics of the preferred observable. Throws InvalidDistribution.
double qubit_coherence_bound(double p0, double p1);

struct CoherenceReport {
  double ed = 0.0;
  double mod_k = 0.0;
  double mod_f = 0.0;
  std::string basis_label;
};

CoherenceReport coherence_report(const DensityMatrix& rho, const MeasurementBasis& a,
                                 std::string basis_label);

}  // namespace cohere
