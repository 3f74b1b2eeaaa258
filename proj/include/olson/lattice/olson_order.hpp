#ifndef OLSON_LATTICE_OLSON_ORDER_HPP
#define OLSON_LATTICE_OLSON_ORDER_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "olson/effect/algebra.hpp"
#include "olson/observable/resolution.hpp"
#include "olson/observable/simple_observable.hpp"

namespace olson {

/// Sorted union of the spectra of a family. Every member's resolution is
/// constant between consecutive merged points.
template <EffectAlgebra A>
std::vector<Rational> merged_grid(const std::vector<SimpleObservable<A>>& xs) {
  std::vector<Rational> grid;
  for (const auto& x : xs) grid.insert(grid.end(), x.points().begin(), x.points().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

/// Grid points plus one sample inside each gap and one beyond each end.
/// A statement "for every t ∈ ℝ" about step functions on `grid` is decided by
/// checking it at these points.
inline std::vector<Rational> sample_points(const std::vector<Rational>& grid) {
  std::vector<Rational> out;
  if (grid.empty()) return out;
  out.push_back(grid.front() - Rational(1));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.push_back(grid[i]);
    out.push_back(i + 1 < grid.size() ? midpoint(grid[i], grid[i + 1]) : grid[i] + Rational(1));
  }
  return out;
}

template <EffectAlgebra A>
void require_same_backend(const std::vector<SimpleObservable<A>>& xs) {
  for (const auto& x : xs)
    if (x.algebra_id() != xs.front().algebra_id())
      throw Error(ErrorCode::BackendMismatch, "observables live on different algebras");
}

namespace detail {

/// First sample t with y((−∞,t)) ≰ x((−∞,t)), i.e. a witness against x ⪯ y.
template <EffectAlgebra A>
std::optional<Rational> open_violation(const SimpleObservable<A>& x, const SimpleObservable<A>& y) {
  for (const auto& t : sample_points(merged_grid<A>({x, y})))
    if (!x.algebra().leq(y.resolution_open(t), x.resolution_open(t))) return t;
  return std::nullopt;
}

template <EffectAlgebra A>
std::optional<Rational> closed_violation(const SimpleObservable<A>& x, const SimpleObservable<A>& y) {
  for (const auto& t : sample_points(merged_grid<A>({x, y})))
    if (!x.algebra().leq(y.resolution_closed(t), x.resolution_closed(t))) return t;
  return std::nullopt;
}

}  // namespace detail

/// x ⪯ y iff y((−∞,t)) ≤ x((−∞,t)) for all t. The closed-interval form
/// y((−∞,t]) ≤ x((−∞,t]) is evaluated as well; the two must agree.
template <EffectAlgebra A>
bool olson_leq(const SimpleObservable<A>& x, const SimpleObservable<A>& y) {
  require_same_backend<A>({x, y});
  bool open_ok = !detail::open_violation(x, y);
  bool closed_ok = !detail::closed_violation(x, y);
  if (open_ok != closed_ok) throw std::logic_error("open and closed forms of the Olson order disagree");
  return open_ok;
}

enum class Verdict { LessOrEqual, GreaterOrEqual, Equal, Incomparable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::LessOrEqual: return "less_or_equal";
    case Verdict::GreaterOrEqual: return "greater_or_equal";
    case Verdict::Equal: return "equal";
    case Verdict::Incomparable: return "incomparable";
  }
  return "unknown";
}

struct OlsonComparison {
  Verdict verdict;
  std::optional<Rational> witness_leq;  ///< where x ⪯ y fails
  std::optional<Rational> witness_geq;  ///< where y ⪯ x fails
};

template <EffectAlgebra A>
OlsonComparison olson_compare(const SimpleObservable<A>& x, const SimpleObservable<A>& y) {
  require_same_backend<A>({x, y});
  OlsonComparison c{Verdict::Incomparable, detail::open_violation(x, y), detail::open_violation(y, x)};
  if ((!c.witness_leq) != (!detail::closed_violation(x, y)) || (!c.witness_geq) != (!detail::closed_violation(y, x)))
    throw std::logic_error("open and closed forms of the Olson order disagree");
  if (!c.witness_leq && !c.witness_geq)
    c.verdict = Verdict::Equal;
  else if (!c.witness_leq)
    c.verdict = Verdict::LessOrEqual;
  else if (!c.witness_geq)
    c.verdict = Verdict::GreaterOrEqual;
  return c;
}

}  // namespace olson

#endif  // OLSON_LATTICE_OLSON_ORDER_HPP
