#ifndef OLSON_OBSERVABLE_RESOLUTION_HPP
#define OLSON_OBSERVABLE_RESOLUTION_HPP

#include <algorithm>
#include <memory>
#include <utility>
#include <vector>

#include "olson/effect/algebra.hpp"
#include "olson/observable/simple_observable.hpp"
#include "olson/rational.hpp"

namespace olson {

/// Left-continuous step function t -> x((−∞, t)).
///
/// With breakpoints t_1 < ... < t_n and values v_0 ≤ ... ≤ v_n the function
/// equals v_0 for t ≤ t_1, v_i for t ∈ (t_i, t_{i+1}] and v_n above t_n.
/// Construction checks v_0 = 0, v_n = 1 and monotonicity, then removes
/// breakpoints across which the value does not change.
template <EffectAlgebra A>
class StepResolution {
 public:
  using element_type = element_t<A>;

  StepResolution(std::shared_ptr<const A> alg, std::vector<Rational> breakpoints, std::vector<element_type> values)
      : alg_(std::move(alg)) {
    if (values.size() != breakpoints.size() + 1)
      throw Error(ErrorCode::NonMonotoneInput, "a resolution needs one more value than breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
      if (!(breakpoints[i - 1] < breakpoints[i])) throw Error(ErrorCode::NonIncreasingPoints, "breakpoints must increase");
    if (!(values.front() == alg_->zero())) throw Error(ErrorCode::NonMonotoneInput, "resolution does not start at zero");
    if (!(values.back() == alg_->one())) throw Error(ErrorCode::NonMonotoneInput, "resolution does not end at one");
    for (std::size_t i = 1; i < values.size(); ++i)
      if (!alg_->leq(values[i - 1], values[i])) throw Error(ErrorCode::NonMonotoneInput, "resolution decreases after " + breakpoints[i - 1].str());
    values_.push_back(values.front());
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
      if (values[i + 1] == values_.back()) continue;
      breakpoints_.push_back(breakpoints[i]);
      values_.push_back(values[i + 1]);
    }
  }

  explicit StepResolution(const SimpleObservable<A>& x) : alg_(x.algebra_ptr()) {
    values_.push_back(alg_->zero());
    for (const auto& p : x.points()) {
      breakpoints_.push_back(p);
      values_.push_back(x.resolution_closed(p));
    }
  }

  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<element_type>& values() const noexcept { return values_; }

  element_type at(const Rational& t) const {
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
  }

  /// Successive differences v_i ⊖ v_{i-1} become the point masses.
  SimpleObservable<A> to_observable() const {
    std::vector<element_type> weights;
    for (std::size_t i = 1; i < values_.size(); ++i) {
      auto d = subtract(*alg_, values_[i], values_[i - 1]);
      if (!d) throw Error(ErrorCode::NonMonotoneInput, "resolution step has no difference");
      weights.push_back(*d);
    }
    return SimpleObservable<A>::from_weights(alg_, breakpoints_, std::move(weights));
  }

  friend bool operator==(const StepResolution& a, const StepResolution& b) {
    return a.alg_->id() == b.alg_->id() && a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const A> alg_;
  std::vector<Rational> breakpoints_;
  std::vector<element_type> values_;
};

/// A monotone family of effects sampled on a finite grid g_0 < ... < g_{n-1}
/// and known to be constant on each open gap: `below` on (−∞, g_0), `at[i]`
/// at g_i, `after[i]` on (g_i, g_{i+1}) (on (g_{n-1}, ∞) for the last one).
/// These 2n+1 values describe the family on all of ℝ.
template <EffectAlgebra A>
struct GridFamily {
  using element_type = element_t<A>;

  std::vector<Rational> grid;
  element_type below;
  std::vector<element_type> at;
  std::vector<element_type> after;

  friend bool operator==(const GridFamily&, const GridFamily&) = default;
};

/// Throws NonMonotoneInput unless below ≤ at[0] ≤ after[0] ≤ at[1] ≤ ...
template <EffectAlgebra A>
void require_monotone(const A& alg, const GridFamily<A>& f) {
  if (f.at.size() != f.grid.size() || f.after.size() != f.grid.size())
    throw Error(ErrorCode::NonMonotoneInput, "grid family has inconsistent lengths");
  for (std::size_t i = 1; i < f.grid.size(); ++i)
    if (!(f.grid[i - 1] < f.grid[i])) throw Error(ErrorCode::NonIncreasingPoints, "grid must increase");
  const element_t<A>* prev = &f.below;
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    if (!alg.leq(*prev, f.at[i]) || !alg.leq(f.at[i], f.after[i]))
      throw Error(ErrorCode::NonMonotoneInput, "family decreases near " + f.grid[i].str());
    prev = &f.after[i];
  }
}

/// The family t -> x((−∞, t)) on `grid`, which must contain the spectrum.
template <EffectAlgebra A>
GridFamily<A> sample_open(const SimpleObservable<A>& x, const std::vector<Rational>& grid) {
  GridFamily<A> f{grid, x.algebra().zero(), {}, {}};
  for (const auto& t : grid) {
    f.at.push_back(x.resolution_open(t));
    f.after.push_back(x.resolution_closed(t));
  }
  return f;
}

/// The family t -> x((−∞, t]) on `grid`.
template <EffectAlgebra A>
GridFamily<A> sample_closed(const SimpleObservable<A>& x, const std::vector<Rational>& grid) {
  GridFamily<A> f{grid, x.algebra().zero(), {}, {}};
  for (const auto& t : grid) {
    auto c = x.resolution_closed(t);
    f.at.push_back(c);
    f.after.push_back(c);
  }
  return f;
}

/// x_l(t) = ⋁_{u<t} x(u). On a step family the supremum over u < g_i is the
/// value of the gap just before g_i, so only gap values survive.
template <EffectAlgebra A>
StepResolution<A> left_regularize(std::shared_ptr<const A> alg, const GridFamily<A>& f) {
  require_monotone(*alg, f);
  std::vector<element_t<A>> values{f.below};
  values.insert(values.end(), f.after.begin(), f.after.end());
  return StepResolution<A>(std::move(alg), f.grid, std::move(values));
}

/// x_r(t) = ⋀_{u>t} x(u): each grid value is replaced by the value of the
/// gap that follows it.
template <EffectAlgebra A>
GridFamily<A> right_regularize(const A& alg, const GridFamily<A>& f) {
  require_monotone(alg, f);
  GridFamily<A> r = f;
  r.at = f.after;
  return r;
}

/// The unique observable whose closed resolution x((−∞, t]) is the given
/// right-continuous family.
template <EffectAlgebra A>
SimpleObservable<A> observable_from_closed(std::shared_ptr<const A> alg, const GridFamily<A>& f) {
  require_monotone(*alg, f);
  if (f.at != f.after) throw Error(ErrorCode::NonMonotoneInput, "family is not right-continuous");
  std::vector<element_t<A>> values{f.below};
  values.insert(values.end(), f.after.begin(), f.after.end());
  return StepResolution<A>(std::move(alg), f.grid, std::move(values)).to_observable();
}

}  // namespace olson

#endif  // OLSON_OBSERVABLE_RESOLUTION_HPP
