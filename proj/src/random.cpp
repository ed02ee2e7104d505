#include "cohere/random.hpp"

#include <vector>

namespace cohere {

Rng derive_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::vector<std::uint32_t> words;
  words.reserve(2 + 2 * tags.size());
  auto push = [&words](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  for (auto t : tags) push(t);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

ComplexMatrix ginibre(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < dim; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  }
  return g;
}

MeasurementBasis random_basis(int dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return MeasurementBasis::from_matrix(std::move(q));
}

DensityMatrix random_density_matrix(int dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix random_pure_state(int dim, Rng& rng) {
  const ComplexMatrix g = ginibre(dim, rng);
  return DensityMatrix::pure(g.col(0));
}

RealVector random_simplex_point(int dim, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RealVector w(dim);
  for (int i = 0; i < dim; ++i) w(i) = expo(rng);
  return w / w.sum();
}

DensityMatrix random_incoherent_state(const MeasurementBasis& a, Rng& rng) {
  const RealVector p = random_simplex_point(a.dim(), rng);
  ComplexMatrix m = a.matrix() * p.cast<Complex>().asDiagonal() * a.matrix().adjoint();
  m = (0.5 * (m + m.adjoint())).eval();
  return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace cohere
