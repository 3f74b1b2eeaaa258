#ifndef OLSON_HILBERT_OPERATOR_HPP
#define OLSON_HILBERT_OPERATOR_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "olson/error.hpp"

namespace olson::hilbert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances. Each is multiplied by max(1, ‖A‖_F) of the
/// operators involved before use.
struct Tolerances {
  double herm = 1e-9;  ///< ‖A − A†‖
  double proj = 1e-9;  ///< ‖P² − P‖
  double eig = 1e-8;   ///< eigenvalues closer than this share a grid point
  double psd = 1e-9;   ///< allowed negative eigenvalue
  double ord = 1e-8;   ///< ‖(I − Q)P‖ for range containment
  double rec = 1e-9;   ///< spectral reconstruction residual
  double lat = 1e-7;   ///< lattice-law comparisons
  double log = 1e-8;   ///< ‖AB − A²‖ for the logical order

  /// Sets a tolerance by name; throws ParseError for unknown names or
  /// values that are not positive and finite.
  void set(const std::string& name, double value) {
    if (!(value > 0) || !std::isfinite(value)) throw Error(ErrorCode::ParseError, "tolerance " + name + " must be positive");
    double* slot = find(name);
    if (!slot) throw Error(ErrorCode::ParseError, "unknown tolerance '" + name + "'");
    *slot = value;
  }

  double get(const std::string& name) const {
    const double* slot = const_cast<Tolerances*>(this)->find(name);
    if (!slot) throw Error(ErrorCode::ParseError, "unknown tolerance '" + name + "'");
    return *slot;
  }

 private:
  double* find(const std::string& name) {
    if (name == "herm") return &herm;
    if (name == "proj") return &proj;
    if (name == "eig") return &eig;
    if (name == "psd") return &psd;
    if (name == "ord") return &ord;
    if (name == "rec") return &rec;
    if (name == "lat") return &lat;
    if (name == "log") return &log;
    return nullptr;
  }
};

inline double scale_of(const Matrix& m) { return std::max(1.0, m.norm()); }

inline Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

/// A Hermitian matrix together with its eigendecomposition. The stored
/// matrix is the symmetrized input (A + A†)/2.
class HermitianOperator {
 public:
  explicit HermitianOperator(const Matrix& a, const Tolerances& tol = {}) : tol_(tol) {
    if (a.rows() != a.cols() || a.rows() == 0)
      throw Error(ErrorCode::DimensionMismatch, "operator must be a non-empty square matrix");
    if (!a.allFinite()) throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
    const double residual = (a - a.adjoint()).norm();
    if (residual > tol.herm * scale_of(a))
      throw Error(ErrorCode::NotHermitian, "Hermiticity residual " + std::to_string(residual) + " exceeds tolerance");
    m_ = (a + a.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m_);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::EigendecompositionFailure, "eigensolver did not converge");
    eigenvalues_ = es.eigenvalues();
    eigenvectors_ = es.eigenvectors();
  }

  static HermitianOperator diagonal(const std::vector<double>& d, const Tolerances& tol = {}) {
    RealVector v(static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) v[static_cast<Eigen::Index>(i)] = d[i];
    return HermitianOperator(v.cast<Complex>().asDiagonal(), tol);
  }

  Eigen::Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  const Tolerances& tolerances() const noexcept { return tol_; }
  /// Ascending.
  const RealVector& eigenvalues() const noexcept { return eigenvalues_; }
  const Matrix& eigenvectors() const noexcept { return eigenvectors_; }
  double scale() const { return scale_of(m_); }

  /// 0 ≤ A ≤ I within τ_psd.
  bool is_effect() const {
    const double t = tol_.psd * scale();
    return eigenvalues_.minCoeff() >= -t && eigenvalues_.maxCoeff() <= 1.0 + t;
  }

  bool is_projection() const { return (m_ * m_ - m_).norm() <= tol_.proj * scale(); }

  /// Number of eigenvalues above 1/2; the rank when this is a projection.
  Eigen::Index rank() const { return (eigenvalues_.array() > 0.5).count(); }

 private:
  Matrix m_;
  RealVector eigenvalues_;
  Matrix eigenvectors_;
  Tolerances tol_;
};

inline void require_same_dim(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()) + " differ");
}

inline void require_effect(const HermitianOperator& a) {
  if (!a.is_effect()) throw Error(ErrorCode::NotAnEffect, "operator is not between 0 and I");
}

inline void require_projection(const HermitianOperator& a) {
  if (!a.is_projection()) throw Error(ErrorCode::NotAProjection, "operator is not idempotent");
}

}  // namespace olson::hilbert

#endif  // OLSON_HILBERT_OPERATOR_HPP
