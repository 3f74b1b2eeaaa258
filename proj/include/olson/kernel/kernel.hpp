#ifndef OLSON_KERNEL_KERNEL_HPP
#define OLSON_KERNEL_KERNEL_HPP

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "olson/effect/tribe.hpp"
#include "olson/kernel/function.hpp"
#include "olson/lattice/olson_order.hpp"
#include "olson/observable/simple_observable.hpp"

namespace olson {

/// A probability distribution with finite support: masses at strictly
/// increasing points.
struct KernelRow {
  std::vector<Rational> support;
  std::vector<Rational> mass;

  /// K(ω, (−∞, t)).
  Rational below(const Rational& t) const {
    Rational s(0);
    for (std::size_t i = 0; i < support.size() && support[i] < t; ++i) s += mass[i];
    return s;
  }

  Rational at(const Rational& t) const {
    auto it = std::lower_bound(support.begin(), support.end(), t);
    if (it == support.end() || *it != t) return Rational(0);
    return mass[static_cast<std::size_t>(it - support.begin())];
  }

  friend bool operator==(const KernelRow&, const KernelRow&) = default;
};

/// K(ω, ·) for each point ω of a finite domain.
struct MarkovKernel {
  std::vector<KernelRow> rows;

  int size() const noexcept { return static_cast<int>(rows.size()); }

  /// Throws InvalidKernel unless every row has increasing support and
  /// positive masses summing to one.
  void validate() const {
    for (std::size_t w = 0; w < rows.size(); ++w) {
      const auto& r = rows[w];
      const std::string where = "kernel row " + std::to_string(w);
      if (r.support.size() != r.mass.size() || r.support.empty())
        throw Error(ErrorCode::InvalidKernel, where + " needs matching non-empty support and mass");
      Rational total(0);
      for (std::size_t i = 0; i < r.support.size(); ++i) {
        if (i > 0 && !(r.support[i - 1] < r.support[i])) throw Error(ErrorCode::InvalidKernel, where + " support must increase");
        if (!(Rational(0) < r.mass[i])) throw Error(ErrorCode::InvalidKernel, where + " has a non-positive mass");
        total += r.mass[i];
      }
      if (total != Rational(1)) throw Error(ErrorCode::InvalidKernel, where + " masses sum to " + total.str());
    }
  }

  /// Union of the row supports.
  std::vector<Rational> support() const {
    std::set<Rational> all;
    for (const auto& r : rows) all.insert(r.support.begin(), r.support.end());
    return {all.begin(), all.end()};
  }

  friend bool operator==(const MarkovKernel&, const MarkovKernel&) = default;
};

/// K(ω, {u_i}) = a_i(ω).
inline MarkovKernel kernel_from_observable(const SimpleObservable<FiniteTribe>& x) {
  const FiniteTribe& t = x.algebra();
  MarkovKernel k{std::vector<KernelRow>(static_cast<std::size_t>(t.omega()))};
  for (int w = 0; w < t.omega(); ++w) {
    auto& row = k.rows[static_cast<std::size_t>(w)];
    for (std::size_t i = 0; i < x.points().size(); ++i) {
      Rational m = t.value(x.weights()[i], w);
      if (m == Rational(0)) continue;
      row.support.push_back(x.points()[i]);
      row.mass.push_back(m);
    }
  }
  return k;
}

/// x_K(E) = K(·, E). Throws KernelValueOutsideTribe when some K(·, {u}) is
/// not an element of the tribe.
inline SimpleObservable<FiniteTribe> observable_from_kernel(const std::shared_ptr<const FiniteTribe>& t, const MarkovKernel& k) {
  if (k.size() != t->omega())
    throw Error(ErrorCode::DomainMismatch,
                "kernel has " + std::to_string(k.size()) + " rows, tribe has " + std::to_string(t->omega()) + " points");
  k.validate();
  std::vector<Rational> points = k.support();
  std::vector<FiniteTribe::element_type> weights;
  for (const auto& u : points) {
    std::vector<Rational> column;
    for (const auto& row : k.rows) column.push_back(row.at(u));
    try {
      weights.push_back(t->element(column));
    } catch (const Error& e) {
      throw Error(ErrorCode::KernelValueOutsideTribe, "K(., {" + u.str() + "}) is not a tribe element: " + e.what());
    }
  }
  return SimpleObservable<FiniteTribe>::from_weights(t, std::move(points), std::move(weights));
}

/// K ⪯ H iff H(ω, (−∞,t)) ≤ K(ω, (−∞,t)) for every ω and t.
inline bool kernel_leq(const MarkovKernel& k, const MarkovKernel& h) {
  if (k.size() != h.size()) throw Error(ErrorCode::DomainMismatch, "kernels have different domains");
  std::vector<Rational> grid = k.support();
  for (const auto& u : h.support()) grid.push_back(u);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (const auto& t : sample_points(grid))
    for (int w = 0; w < k.size(); ++w)
      if (k.rows[static_cast<std::size_t>(w)].below(t) < h.rows[static_cast<std::size_t>(w)].below(t)) return false;
  return true;
}

/// Deterministic kernel ω ↦ δ_{f(ω)}.
inline MarkovKernel deterministic_kernel(const MeasurableFunction& f) {
  MarkovKernel k;
  for (const auto& v : f.values) k.rows.push_back({{v}, {Rational(1)}});
  return k;
}

/// The observable on a tribe whose weights are the indicators of the level
/// sets of f.
inline SimpleObservable<FiniteTribe> crisp_observable(const std::shared_ptr<const FiniteTribe>& t, const MeasurableFunction& f) {
  return observable_from_kernel(t, deterministic_kernel(f));
}

}  // namespace olson

#endif  // OLSON_KERNEL_KERNEL_HPP
