#ifndef OLSON_HILBERT_SPECTRAL_HPP
#define OLSON_HILBERT_SPECTRAL_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "olson/hilbert/operator.hpp"

namespace olson::hilbert {

/// Sorted values with runs closer than `tol` (measured from the first value
/// of the run) replaced by their mean.
inline std::vector<double> cluster_values(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i;
    double sum = 0;
    while (j < values.size() && values[j] - values[i] <= tol) sum += values[j++];
    out.push_back(sum / static_cast<double>(j - i));
    i = j;
  }
  return out;
}

/// E_A((−∞, t]) with eigenvalues up to t + slack counted as ≤ t.
inline Matrix cumulative_projection(const HermitianOperator& a, double t, double slack) {
  const auto& ev = a.eigenvalues();
  Eigen::Index k = 0;
  while (k < ev.size() && ev[k] <= t + slack) ++k;
  const auto v = a.eigenvectors().leftCols(k);
  return v * v.adjoint();
}

/// Eigenvalue grid λ_1 < ... < λ_m and P_i = E_A((−∞, λ_i]).
struct SpectralMeasure {
  std::vector<double> grid;
  std::vector<Matrix> cumulative;

  /// Σ λ_i (P_i − P_{i−1}).
  Matrix reconstruct() const {
    const Eigen::Index d = cumulative.back().rows();
    Matrix sum = Matrix::Zero(d, d);
    Matrix prev = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      sum += grid[i] * (cumulative[i] - prev);
      prev = cumulative[i];
    }
    return sum;
  }
};

inline double eig_slack(const HermitianOperator& a) { return a.tolerances().eig * a.scale(); }

inline std::vector<double> eigenvalue_grid(const std::vector<const HermitianOperator*>& ops) {
  std::vector<double> all;
  double slack = 0;
  for (const auto* a : ops) {
    all.insert(all.end(), a->eigenvalues().begin(), a->eigenvalues().end());
    slack = std::max(slack, eig_slack(*a));
  }
  return cluster_values(std::move(all), slack);
}

/// Throws EigendecompositionFailure when the reconstruction residual
/// exceeds τ_rec.
inline SpectralMeasure spectral_measure(const HermitianOperator& a) {
  SpectralMeasure m;
  m.grid = eigenvalue_grid({&a});
  for (double t : m.grid) m.cumulative.push_back(cumulative_projection(a, t, eig_slack(a)));
  const double residual = (m.reconstruct() - a.matrix()).norm();
  if (residual > a.tolerances().rec * a.scale())
    throw Error(ErrorCode::EigendecompositionFailure, "spectral reconstruction residual " + std::to_string(residual));
  return m;
}

inline double reconstruction_residual(const HermitianOperator& a) {
  return (spectral_measure(a).reconstruct() - a.matrix()).norm() / a.scale();
}

// Projection lattice on matrices that are already known to be projections.

/// ‖(I − Q)P‖, zero exactly when range(P) ⊆ range(Q).
inline double containment_residual(const Matrix& p, const Matrix& q) { return (p - q * p).norm(); }

/// Projection onto range(P) ∩ range(Q): the null space of [I − P; I − Q].
inline Matrix proj_meet(const Matrix& p, const Matrix& q, double threshold) {
  if (p.rows() != q.rows()) throw Error(ErrorCode::DimensionMismatch, "projection dimensions differ");
  const Eigen::Index d = p.rows();
  Matrix stacked(2 * d, d);
  stacked << identity(d) - p, identity(d) - q;
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < s.size() && s[rank] > threshold) ++rank;
  const auto basis = svd.matrixV().rightCols(d - rank);
  return basis * basis.adjoint();
}

/// Projection onto the closed span of range(P) ∪ range(Q).
inline Matrix proj_join(const Matrix& p, const Matrix& q, double threshold) {
  const Eigen::Index d = p.rows();
  return identity(d) - proj_meet(identity(d) - p, identity(d) - q, threshold);
}

inline HermitianOperator proj_meet(const HermitianOperator& p, const HermitianOperator& q) {
  require_same_dim(p, q);
  require_projection(p);
  require_projection(q);
  return HermitianOperator(proj_meet(p.matrix(), q.matrix(), p.tolerances().ord), p.tolerances());
}

inline HermitianOperator proj_join(const HermitianOperator& p, const HermitianOperator& q) {
  require_same_dim(p, q);
  require_projection(p);
  require_projection(q);
  return HermitianOperator(proj_join(p.matrix(), q.matrix(), p.tolerances().ord), p.tolerances());
}

/// range(P) ⊆ range(Q).
inline bool range_contained(const HermitianOperator& p, const HermitianOperator& q) {
  require_same_dim(p, q);
  return containment_residual(p.matrix(), q.matrix()) <= p.tolerances().ord;
}

// Orders.

/// First merged grid point t with E_B((−∞,t]) ≰ E_A((−∞,t]), i.e. a
/// witness against A ⪯_s B.
inline std::optional<double> spectral_violation(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b);
  const double slack = std::max(eig_slack(a), eig_slack(b));
  for (double t : eigenvalue_grid({&a, &b})) {
    const Matrix ea = cumulative_projection(a, t, slack);
    const Matrix eb = cumulative_projection(b, t, slack);
    if (containment_residual(eb, ea) > a.tolerances().ord) return t;
  }
  return std::nullopt;
}

/// A ⪯_s B iff E_B((−∞,t]) ≤ E_A((−∞,t]) for every t.
inline bool spectral_leq(const HermitianOperator& a, const HermitianOperator& b) { return !spectral_violation(a, b); }

/// B − A positive semidefinite within τ_psd.
inline bool loewner_leq(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b);
  const double scale = std::max(a.scale(), b.scale());
  Eigen::SelfAdjointEigenSolver<Matrix> es(b.matrix() - a.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -a.tolerances().psd * scale;
}

/// AB = A² within τ_log.
inline bool logical_leq(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b);
  const double scale = std::max(a.scale(), b.scale());
  return (a.matrix() * b.matrix() - a.matrix() * a.matrix()).norm() <= a.tolerances().log * scale * scale;
}

// Lattice operations on effects.

struct SpectralBound {
  HermitianOperator value;
  std::vector<double> grid;
  std::vector<Matrix> resolution;  ///< closed resolution of the result on `grid`
  double max_residual = 0;         ///< worst projection/monotonicity residual after repair
};

namespace detail {

inline SpectralBound spectral_bound(const std::vector<HermitianOperator>& as, bool meet) {
  if (as.empty()) throw Error(ErrorCode::EmptyFamily, "meet/join of an empty family is undefined");
  std::vector<const HermitianOperator*> ptrs;
  for (const auto& a : as) {
    require_same_dim(as.front(), a);
    require_effect(a);
    ptrs.push_back(&a);
  }
  const Tolerances& tol = as.front().tolerances();
  const Eigen::Index d = as.front().dim();
  double slack = 0;
  for (const auto* a : ptrs) slack = std::max(slack, eig_slack(*a));
  const auto grid = eigenvalue_grid(ptrs);

  std::vector<Matrix> res;
  for (double t : grid) {
    Matrix p = cumulative_projection(as.front(), t, slack);
    for (std::size_t k = 1; k < as.size(); ++k) {
      Matrix q = cumulative_projection(as[k], t, slack);
      p = meet ? proj_join(p, q, tol.ord) : proj_meet(p, q, tol.ord);
    }
    if (!res.empty() && containment_residual(res.back(), p) > tol.ord) p = proj_join(res.back(), p, tol.ord);
    res.push_back(std::move(p));
  }

  double worst = (res.back() - identity(d)).norm();
  Matrix sum = Matrix::Zero(d, d);
  Matrix prev = Matrix::Zero(d, d);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    worst = std::max(worst, (res[i] * res[i] - res[i]).norm());
    worst = std::max(worst, containment_residual(prev, res[i]));
    sum += grid[i] * (res[i] - prev);
    prev = res[i];
  }
  return {HermitianOperator(sum, tol), grid, std::move(res), worst};
}

}  // namespace detail

/// Greatest lower bound under ⪯_s: the closed-resolution value at t is
/// ⋁_α E_{A_α}((−∞,t]), constant on [t_i, t_{i+1}), so right
/// regularization keeps it.
inline SpectralBound spectral_meet_detailed(const std::vector<HermitianOperator>& as) {
  return detail::spectral_bound(as, true);
}

/// Least upper bound under ⪯_s: closed-resolution value ⋀_α E_{A_α}((−∞,t]).
inline SpectralBound spectral_join_detailed(const std::vector<HermitianOperator>& as) {
  return detail::spectral_bound(as, false);
}

inline HermitianOperator spectral_meet(const std::vector<HermitianOperator>& as) { return spectral_meet_detailed(as).value; }
inline HermitianOperator spectral_join(const std::vector<HermitianOperator>& as) { return spectral_join_detailed(as).value; }

/// I − A.
inline HermitianOperator negate(const HermitianOperator& a) {
  require_effect(a);
  return HermitianOperator(identity(a.dim()) - a.matrix(), a.tolerances());
}

/// ‖A − B‖_F relative to max(1, ‖A‖_F, ‖B‖_F).
inline double relative_distance(const HermitianOperator& a, const HermitianOperator& b) {
  return (a.matrix() - b.matrix()).norm() / std::max(a.scale(), b.scale());
}

}  // namespace olson::hilbert

#endif  // OLSON_HILBERT_SPECTRAL_HPP
