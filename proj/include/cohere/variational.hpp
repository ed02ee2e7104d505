#pragma once

#include <functional>
#include <span>

#include "cohere/core.hpp"
#include "cohere/optimizer.hpp"

namespace cohere {

/// Outcome statistics of a d-outcome measurement.
class OutcomeDistribution {
public:
  /// Entries within 1e-12 of [0, 1] are clipped into it; the sum must be 1
  /// within 1e-9. Throws InvalidDistribution otherwise.
  static OutcomeDistribution from_probs(RealVector probs);

  Eigen::Index size() const { return probs_.size(); }
  double operator[](Eigen::Index i) const { return probs_(i); }
  const RealVector& probs() const { return probs_; }

private:
  explicit OutcomeDistribution(RealVector p) : probs_(std::move(p)) {}
  RealVector probs_;
};

/// Born-rule statistics <i|rho|i> of measuring rho in basis b.
OutcomeDistribution measure_statistics(const DensityMatrix& rho, const MeasurementBasis& b);

/// Half the L1 distance. Throws LengthMismatch.
double kolmogorov_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Bhattacharyya overlap sum_i sqrt(p_i q_i). Throws LengthMismatch.
double classical_fidelity(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// exp(iH(theta)) for a dim x dim Hermitian H assembled from dim^2 reals:
/// theta[0..dim) is the diagonal, followed by (re, im) of H(i, j) for each
/// i < j in row-major order. Throws BadParamLength.
MeasurementBasis basis_from_params(std::span<const double> theta, int dim);

/// Called with the objective value (distance or fidelity) of every candidate
/// basis the search evaluates.
using CandidateObserver = std::function<void(double)>;

/// sup over projective bases of the Kolmogorov distance between the
/// statistics of rho and of its dephased counterpart.
double variational_mod_k(const DensityMatrix& rho, const MeasurementBasis& a,
                         const OptimizerConfig& cfg, const CandidateObserver& observe = {});

/// 1 - inf over projective bases of the classical fidelity between the
/// statistics of rho and of its dephased counterpart. rho is passed through
/// regularize_for_fidelity_search() first.
double variational_mod_f(const DensityMatrix& rho, const MeasurementBasis& a,
                         const OptimizerConfig& cfg, const CandidateObserver& observe = {});

/// Mixing weight applied to nearly singular inputs of variational_mod_f.
inline constexpr double kFidelityMixing = 1e-6;

/// (1 - eps) rho + eps I/d when rho has an eigenvalue below eps, else rho.
DensityMatrix regularize_for_fidelity_search(const DensityMatrix& rho);

/// inf over projective bases of the Shannon entropy (bits) of the outcome
/// statistics.
double measurement_entropy(const DensityMatrix& rho, const OptimizerConfig& cfg);

struct EntropyPair {
  double state = 0.0;     // measurement entropy of rho
  double dephased = 0.0;  // measurement entropy of rho_A
};

EntropyPair variational_ed_terms(const DensityMatrix& rho, const MeasurementBasis& a,
                                 const OptimizerConfig& cfg);

/// |measurement_entropy(rho) - measurement_entropy(rho_A)|.
double variational_ed(const DensityMatrix& rho, const MeasurementBasis& a,
                      const OptimizerConfig& cfg);

}  // namespace cohere
