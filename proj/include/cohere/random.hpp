#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "cohere/core.hpp"

namespace cohere {

using Rng = std::mt19937_64;

/// Deterministic generator for a (seed, tags...) tuple. Distinct tags give
/// independent-looking streams; the same tuple always gives the same stream.
Rng derive_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags = {});

/// Complex Ginibre matrix with i.i.d. standard normal real/imag parts.
ComplexMatrix ginibre(int dim, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with the phase fix).
MeasurementBasis random_basis(int dim, Rng& rng);

/// G G^dagger / Tr, G Ginibre: full rank with probability one.
DensityMatrix random_density_matrix(int dim, Rng& rng);

DensityMatrix random_pure_state(int dim, Rng& rng);

/// Flat-Dirichlet probability vector.
RealVector random_simplex_point(int dim, Rng& rng);

/// State diagonal in basis a with random flat-Dirichlet weights.
DensityMatrix random_incoherent_state(const MeasurementBasis& a, Rng& rng);

}  // namespace cohere
