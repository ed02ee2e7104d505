#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "cohere/core.hpp"

namespace cohere {

/// CPTP map in Kraus form, sum_k K_k^dagger K_k = I within 1e-9.
class Channel {
public:
  /// Throws DimensionMismatch for an empty list or mismatched shapes,
  /// TracePreservationViolated when the completeness relation fails.
  static Channel from_kraus(std::vector<ComplexMatrix> kraus);

  static Channel identity(int dim);
  static Channel unitary(const ComplexMatrix& u);
  /// Kraus operators are the rank-1 projectors of basis a.
  static Channel complete_dephasing(const MeasurementBasis& a);

  int dim() const { return static_cast<int>(kraus_.front().rows()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }

  /// Sum_k K_k m K_k^dagger for an arbitrary d x d matrix.
  ComplexMatrix apply(const ComplexMatrix& m) const;

private:
  explicit Channel(std::vector<ComplexMatrix> k) : kraus_(std::move(k)) {}
  std::vector<ComplexMatrix> kraus_;
};

/// Largest deviation of sum_k K^dagger K from the identity.
double completeness_defect(const std::vector<ComplexMatrix>& kraus);

DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho);

/// Largest violation, over the matrix units E_kl of basis a, of: Lambda(E_kk)
/// diagonal, and Delta(Lambda(E_kl)) = 0 for k != l.
double dephasing_covariance_defect(const Channel& ch, const MeasurementBasis& a);

/// Whether the channel commutes with complete dephasing in basis a (within 1e-9).
bool is_dephasing_covariant(const Channel& ch, const MeasurementBasis& a);

// Constructive family of dephasing-covariant operations.
struct PermutationTerm {
  std::vector<int> perm;  // |i> -> |perm[i]>
};
struct PhaseTerm {
  std::vector<double> phases;  // |i> -> exp(i phases[i]) |i>
};
struct PartialDephaseTerm {
  double strength;  // (1 - p) id + p Delta
};

struct DioTerm {
  double weight;
  std::variant<PermutationTerm, PhaseTerm, PartialDephaseTerm> kind;
};

struct DioRecipe {
  std::vector<DioTerm> terms;
};

/// Kraus form of the convex mixture described by the recipe, built in basis
/// a. Throws InvalidWeights unless weights are >= 0 and sum to 1.
Channel dio_from_recipe(const DioRecipe& recipe, const MeasurementBasis& a);

DioRecipe random_dio_recipe(int dim, std::uint64_t seed);

/// Random mixture of a permutation, a diagonal phase unitary and a partial
/// dephasing, all relative to basis a.
Channel random_dio(int dim, const MeasurementBasis& a, std::uint64_t seed);

/// Generic CPTP map with `kraus_count` operators cut from a Haar-random
/// isometry. Not dephasing-covariant in general.
Channel random_channel(int dim, int kraus_count, std::uint64_t seed);

struct MonotonicityCheck {
  double before = 0.0;
  double after = 0.0;
  bool ok = false;
};

/// MOD-K coherence before and after the channel. Throws NotDio when the
/// channel is not dephasing-covariant in basis a.
MonotonicityCheck check_monotonicity(const DensityMatrix& rho, const Channel& ch,
                                     const MeasurementBasis& a);

/// Block-diagonal p1 rho1 (+) p2 rho2. Throws InvalidWeights.
DensityMatrix direct_sum(double p1, const DensityMatrix& rho1, double p2,
                         const DensityMatrix& rho2);

}  // namespace cohere
