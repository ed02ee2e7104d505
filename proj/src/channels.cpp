#include "cohere/channels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "cohere/measures.hpp"
#include "cohere/random.hpp"

namespace cohere {

namespace {

constexpr double kChannelTol = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

double completeness_defect(const std::vector<ComplexMatrix>& kraus) {
  const auto n = kraus.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& k : kraus) sum += k.adjoint() * k;
  return (sum - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

Channel Channel::from_kraus(std::vector<ComplexMatrix> kraus) {
  if (kraus.empty()) throw Error(ErrorCode::DimensionMismatch, "channel needs a Kraus operator");
  const auto n = kraus.front().rows();
  for (const auto& k : kraus) {
    if (k.rows() != n || k.cols() != n || n < 1 || n > kMaxDim) {
      throw Error(ErrorCode::DimensionMismatch, "Kraus operators must all be d x d");
    }
    if (!all_finite(k)) throw Error(ErrorCode::NonFinite, "Kraus operator has NaN/Inf");
  }
  const double defect = completeness_defect(kraus);
  if (defect > kChannelTol) {
    std::ostringstream os;
    os << "max |sum K^dagger K - I| = " << defect;
    throw Error(ErrorCode::TracePreservationViolated, os.str());
  }
  return Channel(std::move(kraus));
}

Channel Channel::identity(int dim) { return from_kraus({ComplexMatrix::Identity(dim, dim)}); }

Channel Channel::unitary(const ComplexMatrix& u) { return from_kraus({u}); }

Channel Channel::complete_dephasing(const MeasurementBasis& a) {
  std::vector<ComplexMatrix> kraus;
  for (int i = 0; i < a.dim(); ++i) kraus.push_back(a.vector(i) * a.vector(i).adjoint());
  return from_kraus(std::move(kraus));
}

ComplexMatrix Channel::apply(const ComplexMatrix& m) const {
  if (m.rows() != dim() || m.cols() != dim()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix and channel dimensions differ");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  for (const auto& k : kraus_) out += k * m * k.adjoint();
  return out;
}

DensityMatrix apply_channel(const Channel& ch, const DensityMatrix& rho) {
  ComplexMatrix out = ch.apply(rho.matrix());
  out = (0.5 * (out + out.adjoint())).eval();
  return DensityMatrix::from_matrix(std::move(out));
}

double dephasing_covariance_defect(const Channel& ch, const MeasurementBasis& a) {
  if (ch.dim() != a.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "channel and basis dimensions differ");
  }
  const int d = a.dim();
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      const ComplexMatrix unit = a.vector(k) * a.vector(l).adjoint();
      const ComplexMatrix image = in_basis(ch.apply(unit), a);
      if (k == l) {
        ComplexMatrix off = image;
        off.diagonal().setZero();
        worst = std::max(worst, off.cwiseAbs().maxCoeff());
      } else {
        worst = std::max(worst, image.diagonal().cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

bool is_dephasing_covariant(const Channel& ch, const MeasurementBasis& a) {
  return dephasing_covariance_defect(ch, a) <= kChannelTol;
}

Channel dio_from_recipe(const DioRecipe& recipe, const MeasurementBasis& a) {
  const int d = a.dim();
  if (recipe.terms.empty()) throw Error(ErrorCode::InvalidWeights, "recipe has no terms");
  double total = 0.0;
  for (const auto& t : recipe.terms) {
    if (!(t.weight >= 0.0)) throw Error(ErrorCode::InvalidWeights, "negative mixture weight");
    total += t.weight;
  }
  if (std::abs(total - 1.0) > kChannelTol) {
    throw Error(ErrorCode::InvalidWeights, "mixture weights must sum to 1");
  }

  const ComplexMatrix& u = a.matrix();
  std::vector<ComplexMatrix> kraus;
  for (const auto& term : recipe.terms) {
    if (term.weight == 0.0) continue;
    const double scale = std::sqrt(term.weight);
    std::visit(
        overloaded{
            [&](const PermutationTerm& p) {
              if (static_cast<int>(p.perm.size()) != d) {
                throw Error(ErrorCode::DimensionMismatch, "permutation length differs from dim");
              }
              std::vector<int> sorted = p.perm;
              std::sort(sorted.begin(), sorted.end());
              for (int i = 0; i < d; ++i) {
                if (sorted[i] != i) throw Error(ErrorCode::InvalidWeights, "not a permutation");
              }
              ComplexMatrix perm = ComplexMatrix::Zero(d, d);
              for (int i = 0; i < d; ++i) perm(p.perm[i], i) = 1.0;
              kraus.push_back(scale * u * perm * u.adjoint());
            },
            [&](const PhaseTerm& p) {
              if (static_cast<int>(p.phases.size()) != d) {
                throw Error(ErrorCode::DimensionMismatch, "phase vector length differs from dim");
              }
              Eigen::VectorXcd diag(d);
              for (int i = 0; i < d; ++i) diag(i) = std::polar(1.0, p.phases[i]);
              kraus.push_back(scale * u * diag.asDiagonal() * u.adjoint());
            },
            [&](const PartialDephaseTerm& p) {
              if (!(p.strength >= 0.0 && p.strength <= 1.0)) {
                throw Error(ErrorCode::InvalidWeights, "dephasing strength outside [0, 1]");
              }
              kraus.push_back(scale * std::sqrt(1.0 - p.strength) * ComplexMatrix::Identity(d, d));
              for (int i = 0; i < d; ++i) {
                kraus.push_back(scale * std::sqrt(p.strength) * a.vector(i) *
                                a.vector(i).adjoint());
              }
            },
        },
        term.kind);
  }
  return Channel::from_kraus(std::move(kraus));
}

DioRecipe random_dio_recipe(int dim, std::uint64_t seed) {
  Rng rng = derive_rng(seed, {0xd10});
  const RealVector w = random_simplex_point(3, rng);

  PermutationTerm perm{std::vector<int>(dim)};
  std::iota(perm.perm.begin(), perm.perm.end(), 0);
  std::shuffle(perm.perm.begin(), perm.perm.end(), rng);

  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  PhaseTerm phase{std::vector<double>(dim)};
  for (auto& ph : phase.phases) ph = angle(rng);

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PartialDephaseTerm dephasing{unit(rng)};

  return DioRecipe{{{w(0), perm}, {w(1), phase}, {w(2), dephasing}}};
}

Channel random_dio(int dim, const MeasurementBasis& a, std::uint64_t seed) {
  if (a.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "basis dimension differs");
  return dio_from_recipe(random_dio_recipe(dim, seed), a);
}

Channel random_channel(int dim, int kraus_count, std::uint64_t seed) {
  if (kraus_count < 1 || dim * kraus_count > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch, "unsupported Kraus count");
  }
  Rng rng = derive_rng(seed, {0xc4a});
  const MeasurementBasis big = random_basis(dim * kraus_count, rng);
  std::vector<ComplexMatrix> kraus;
  for (int k = 0; k < kraus_count; ++k) {
    kraus.push_back(big.matrix().block(k * dim, 0, dim, dim));
  }
  return Channel::from_kraus(std::move(kraus));
}

MonotonicityCheck check_monotonicity(const DensityMatrix& rho, const Channel& ch,
                                     const MeasurementBasis& a) {
  if (!is_dephasing_covariant(ch, a)) {
    throw Error(ErrorCode::NotDio, "channel does not commute with dephasing");
  }
  MonotonicityCheck r;
  r.before = coherence_mod_k(rho, a);
  r.after = coherence_mod_k(apply_channel(ch, rho), a);
  r.ok = r.after <= r.before + kChannelTol;
  return r;
}

DensityMatrix direct_sum(double p1, const DensityMatrix& rho1, double p2,
                         const DensityMatrix& rho2) {
  if (!(p1 >= 0.0) || !(p2 >= 0.0) || std::abs(p1 + p2 - 1.0) > kChannelTol) {
    throw Error(ErrorCode::InvalidWeights, "block weights must be >= 0 and sum to 1");
  }
  const int d1 = rho1.dim();
  const int d2 = rho2.dim();
  if (d1 + d2 > kMaxDim) throw Error(ErrorCode::DimensionMismatch, "direct sum too large");
  ComplexMatrix m = ComplexMatrix::Zero(d1 + d2, d1 + d2);
  m.topLeftCorner(d1, d1) = p1 * rho1.matrix();
  m.bottomRightCorner(d2, d2) = p2 * rho2.matrix();
  return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace cohere
