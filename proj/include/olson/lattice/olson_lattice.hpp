#ifndef OLSON_LATTICE_OLSON_LATTICE_HPP
#define OLSON_LATTICE_OLSON_LATTICE_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "olson/effect/algebra.hpp"
#include "olson/lattice/olson_order.hpp"
#include "olson/observable/resolution.hpp"
#include "olson/observable/simple_observable.hpp"

namespace olson {

/// How a meet/join result was obtained.
enum class Certification {
  Formula,     ///< elementwise lattice operations on the merged grid
  Exhaustive,  ///< elementwise operations failed; decided by enumerating every grid observable
};

inline std::string to_string(Certification c) { return c == Certification::Formula ? "formula" : "exhaustive"; }

template <EffectAlgebra A>
struct BoundResult {
  std::optional<SimpleObservable<A>> value;  ///< empty: does not exist
  Certification certified = Certification::Formula;

  bool exists() const noexcept { return value.has_value(); }
};

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// Every observable whose spectrum lies in `grid`, one per monotone chain
/// v_1 ≤ ... ≤ v_{n-1} of carrier elements (v_i = x((−∞, g_i]) ).
template <FiniteEffectAlgebra A>
std::vector<SimpleObservable<A>> enumerate_grid_observables(const std::shared_ptr<const A>& alg, const std::vector<Rational>& grid,
                                                            std::size_t cap = default_enumeration_cap) {
  if (grid.empty()) throw Error(ErrorCode::EmptyFamily, "grid is empty");
  const auto carrier = alg->enumerate();
  const std::size_t free = grid.size() - 1;
  std::vector<SimpleObservable<A>> out;
  std::vector<element_t<A>> chain{alg->zero()};
  std::function<void()> extend = [&] {
    if (chain.size() == free + 1) {
      if (out.size() >= cap) throw Error(ErrorCode::CarrierTooLarge, "grid enumeration exceeds cap " + std::to_string(cap));
      std::vector<element_t<A>> values = chain;
      values.push_back(alg->one());
      out.push_back(StepResolution<A>(alg, grid, std::move(values)).to_observable());
      return;
    }
    for (const auto& c : carrier) {
      if (!alg->leq(chain.back(), c)) continue;
      chain.push_back(c);
      extend();
      chain.pop_back();
    }
  };
  extend();
  return out;
}

namespace detail {

template <EffectAlgebra A, class Op>
std::optional<element_t<A>> fold(const A& alg, const std::vector<element_t<A>>& items, Op op) {
  std::optional<element_t<A>> acc = items.front();
  for (std::size_t i = 1; i < items.size() && acc; ++i) acc = (alg.*op)(*acc, items[i]);
  return acc;
}

/// Pointwise lattice operation over the family, on the merged grid.
/// `closed_form` selects x((−∞,t]) instead of x((−∞,t)) for the grid values.
template <EffectAlgebra A, class Op>
std::optional<GridFamily<A>> pointwise(const std::vector<SimpleObservable<A>>& xs, const std::vector<Rational>& grid, Op op,
                                       bool closed_form) {
  const A& alg = xs.front().algebra();
  GridFamily<A> f{grid, alg.zero(), {}, {}};
  std::vector<element_t<A>> at, after;
  for (const auto& t : grid) {
    at.clear();
    after.clear();
    for (const auto& x : xs) {
      at.push_back(closed_form ? x.resolution_closed(t) : x.resolution_open(t));
      after.push_back(x.resolution_closed(t));
    }
    auto a = fold(alg, at, op);
    auto b = fold(alg, after, op);
    if (!a || !b) return std::nullopt;
    f.at.push_back(*a);
    f.after.push_back(*b);
  }
  return f;
}

template <EffectAlgebra A>
void require_family(const std::vector<SimpleObservable<A>>& xs) {
  if (xs.empty()) throw Error(ErrorCode::EmptyFamily, "meet/join of an empty family is undefined");
  require_same_backend(xs);
}

/// Greatest lower bound (or least upper bound when `upper`) of `xs` among
/// all observables on the merged grid, by enumeration.
template <EffectAlgebra A>
std::optional<SimpleObservable<A>> exhaustive_bound(const std::vector<SimpleObservable<A>>& xs, bool upper, std::size_t cap) {
  if constexpr (FiniteEffectAlgebra<A>) {
    auto all = enumerate_grid_observables(xs.front().algebra_ptr(), merged_grid(xs), cap);
    std::vector<const SimpleObservable<A>*> bounds;
    for (const auto& z : all) {
      bool ok = true;
      for (const auto& x : xs)
        if (!(upper ? olson_leq(x, z) : olson_leq(z, x))) {
          ok = false;
          break;
        }
      if (ok) bounds.push_back(&z);
    }
    for (const auto* g : bounds) {
      bool extreme = true;
      for (const auto* z : bounds)
        if (!(upper ? olson_leq(*g, *z) : olson_leq(*z, *g))) {
          extreme = false;
          break;
        }
      if (extreme) return *g;
    }
    return std::nullopt;
  } else {
    (void)xs, (void)upper, (void)cap;
    throw Error(ErrorCode::NotEnumerable, "backend cannot be enumerated to certify non-existence");
  }
}

}  // namespace detail

template <EffectAlgebra A>
struct FormulaRoutes {
  SimpleObservable<A> by_open;
  SimpleObservable<A> by_closed;
};

/// ⋀ xs (or ⋁ xs when `upper`) by both formula routes, or nullopt when some
/// elementwise operation does not exist.
///
/// Meet, open route: x(t) = ⋁_α x_α((−∞,t)) on the merged grid, made
/// left-continuous. Meet, closed route: x(t) = ⋀_{u>t} ⋁_α x_α((−∞,u]), the
/// right regularization of the pointwise join of closed resolutions.
/// Join, open route: x(t) = ⋁_{u<t} ⋀_α x_α((−∞,u)), the left regularization
/// of the pointwise meet. Join, closed route: x(t) = ⋀_α x_α((−∞,t]).
template <EffectAlgebra A>
std::optional<FormulaRoutes<A>> formula_routes(const std::vector<SimpleObservable<A>>& xs, bool upper) {
  detail::require_family(xs);
  const auto& alg = xs.front().algebra_ptr();
  const auto grid = merged_grid(xs);
  const auto op = upper ? &A::meet : &A::join;
  auto open = detail::pointwise(xs, grid, op, false);
  auto closed = detail::pointwise(xs, grid, op, true);
  if (!open || !closed) return std::nullopt;
  auto by_open = left_regularize(alg, *open).to_observable();
  auto by_closed = upper ? observable_from_closed(alg, *closed) : observable_from_closed(alg, right_regularize(*alg, *closed));
  return FormulaRoutes<A>{std::move(by_open), std::move(by_closed)};
}

namespace detail {

template <EffectAlgebra A>
BoundResult<A> bound(const std::vector<SimpleObservable<A>>& xs, bool upper, std::size_t cap) {
  auto routes = formula_routes(xs, upper);
  if (!routes) return {exhaustive_bound(xs, upper, cap), Certification::Exhaustive};
  if (!(routes->by_open == routes->by_closed))
    throw std::logic_error(upper ? "open and closed join formulas disagree" : "open and closed meet formulas disagree");
  return {std::move(routes->by_open), Certification::Formula};
}

}  // namespace detail

/// ⋀ xs under the Olson order. Both formula routes are computed and must
/// coincide. When some elementwise join does not exist in the algebra the
/// answer is decided by enumeration.
template <EffectAlgebra A>
BoundResult<A> olson_meet(const std::vector<SimpleObservable<A>>& xs, std::size_t cap = default_enumeration_cap) {
  return detail::bound(xs, false, cap);
}

/// ⋁ xs under the Olson order.
template <EffectAlgebra A>
BoundResult<A> olson_join(const std::vector<SimpleObservable<A>>& xs, std::size_t cap = default_enumeration_cap) {
  return detail::bound(xs, true, cap);
}

/// Convenience for lattice backends where the bound always exists.
template <EffectAlgebra A>
SimpleObservable<A> meet_of(const SimpleObservable<A>& x, const SimpleObservable<A>& y) {
  auto r = olson_meet<A>({x, y});
  if (!r.value) throw Error(ErrorCode::InvalidAlgebra, "meet does not exist on this backend");
  return *r.value;
}

template <EffectAlgebra A>
SimpleObservable<A> join_of(const SimpleObservable<A>& x, const SimpleObservable<A>& y) {
  auto r = olson_join<A>({x, y});
  if (!r.value) throw Error(ErrorCode::InvalidAlgebra, "join does not exist on this backend");
  return *r.value;
}

}  // namespace olson

#endif  // OLSON_LATTICE_OLSON_LATTICE_HPP
