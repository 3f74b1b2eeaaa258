#ifndef OLSON_HILBERT_RANDOM_HPP
#define OLSON_HILBERT_RANDOM_HPP

#include <random>
#include <vector>

#include "olson/hilbert/operator.hpp"

namespace olson::hilbert {

using Rng = std::mt19937_64;

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
inline Matrix random_unitary(Eigen::Index d, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = Complex(n(rng), n(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double m = std::abs(r(j, j));
    if (m > 0) q.col(j) *= r(j, j) / m;
  }
  return q;
}

inline HermitianOperator with_spectrum(const std::vector<double>& spectrum, Rng& rng, const Tolerances& tol = {}) {
  const auto d = static_cast<Eigen::Index>(spectrum.size());
  const Matrix u = random_unitary(d, rng);
  RealVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v[i] = spectrum[static_cast<std::size_t>(i)];
  return HermitianOperator(u * v.cast<Complex>().asDiagonal() * u.adjoint(), tol);
}

/// U diag(λ) U† with λ uniform in [0, 1].
inline HermitianOperator random_effect(Eigen::Index d, Rng& rng, const Tolerances& tol = {}) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> spectrum(static_cast<std::size_t>(d));
  for (auto& s : spectrum) s = u(rng);
  return with_spectrum(spectrum, rng, tol);
}

/// Rank drawn uniformly from 0..d.
inline HermitianOperator random_projection(Eigen::Index d, Rng& rng, const Tolerances& tol = {}) {
  const auto rank = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(d + 1));
  std::vector<double> spectrum(static_cast<std::size_t>(d), 0.0);
  for (Eigen::Index i = 0; i < rank; ++i) spectrum[static_cast<std::size_t>(i)] = 1.0;
  return with_spectrum(spectrum, rng, tol);
}

/// Diagonal effect with entries uniform in [0, 1].
inline HermitianOperator random_diagonal_effect(Eigen::Index d, Rng& rng, const Tolerances& tol = {}) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> entries(static_cast<std::size_t>(d));
  for (auto& e : entries) e = u(rng);
  return HermitianOperator::diagonal(entries, tol);
}

}  // namespace olson::hilbert

#endif  // OLSON_HILBERT_RANDOM_HPP
