#ifndef OLSON_OBSERVABLE_SIMPLE_OBSERVABLE_HPP
#define OLSON_OBSERVABLE_SIMPLE_OBSERVABLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "olson/effect/algebra.hpp"
#include "olson/observable/borel_set.hpp"
#include "olson/observable/piecewise_map.hpp"
#include "olson/rational.hpp"

namespace olson {

/// Observable with a finite spectrum u_1 < ... < u_k and nonzero weights
/// a_i = x({u_i}) with a_1 + ... + a_k = 1, so x(E) = Σ{a_i : u_i ∈ E}.
///
/// Zero weights are dropped on construction, so the stored points are
/// exactly the spectrum and two observables are equal iff their point and
/// weight lists coincide.
template <EffectAlgebra A>
class SimpleObservable {
 public:
  using algebra_type = A;
  using element_type = element_t<A>;

  static SimpleObservable from_weights(std::shared_ptr<const A> alg, std::vector<Rational> points,
                                       std::vector<element_type> weights) {
    if (points.size() != weights.size())
      throw Error(ErrorCode::WeightsNotSummable, "point and weight lists differ in length");
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i - 1] < points[i]))
        throw Error(ErrorCode::NonIncreasingPoints, points[i - 1].str() + " is not below " + points[i].str());
    SimpleObservable x;
    x.alg_ = std::move(alg);
    element_type acc = x.alg_->zero();
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto s = x.alg_->add(acc, weights[i]);
      if (!s) throw Error(ErrorCode::WeightsNotSummable, "partial sum undefined at point " + points[i].str());
      acc = *s;
      if (weights[i] == x.alg_->zero()) continue;
      x.points_.push_back(points[i]);
      x.weights_.push_back(weights[i]);
    }
    if (!(acc == x.alg_->one())) throw Error(ErrorCode::WeightsNotSummable, "weights sum to " + x.alg_->describe(acc) + ", not one");
    x.rebuild_cumulative();
    return x;
  }

  /// q_a: mass a' at 0 and a at 1.
  static SimpleObservable question(std::shared_ptr<const A> alg, const element_type& a) {
    auto a_prime = alg->complement(a);
    return from_weights(std::move(alg), {Rational(0), Rational(1)}, {a_prime, a});
  }

  /// The observable concentrated at one point with weight one.
  static SimpleObservable constant(std::shared_ptr<const A> alg, const Rational& point) {
    auto one = alg->one();
    return from_weights(std::move(alg), {point}, {one});
  }

  const A& algebra() const noexcept { return *alg_; }
  const std::shared_ptr<const A>& algebra_ptr() const noexcept { return alg_; }
  AlgebraId algebra_id() const noexcept { return alg_->id(); }
  const std::vector<Rational>& points() const noexcept { return points_; }
  const std::vector<element_type>& weights() const noexcept { return weights_; }
  std::vector<Rational> spectrum() const { return points_; }

  /// x((−∞, t)).
  element_type resolution_open(const Rational& t) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), t);
    return cumulative_[static_cast<std::size_t>(it - points_.begin())];
  }

  /// x((−∞, t]).
  element_type resolution_closed(const Rational& t) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), t);
    return cumulative_[static_cast<std::size_t>(it - points_.begin())];
  }

  element_type evaluate(const BorelSet& e) const {
    element_type acc = alg_->zero();
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (e.contains(points_[i])) acc = checked_add(acc, weights_[i]);
    return acc;
  }

  /// f(x)(E) = x(f⁻¹(E)).
  SimpleObservable apply_map(const PiecewiseMap& f) const {
    std::map<Rational, element_type> image;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      auto v = f.apply(points_[i]);
      if (!v) throw Error(ErrorCode::MapUndefinedOnSpectrum, f.name() + " is undefined at " + points_[i].str());
      auto [it, inserted] = image.try_emplace(*v, weights_[i]);
      if (!inserted) it->second = checked_add(it->second, weights_[i]);
    }
    std::vector<Rational> pts;
    std::vector<element_type> ws;
    for (auto& [p, w] : image) {
      pts.push_back(p);
      ws.push_back(w);
    }
    return from_weights(alg_, std::move(pts), std::move(ws));
  }

  bool in_unit_interval() const {
    return points_.front() >= Rational(0) && points_.back() <= Rational(1);
  }

  /// x⁻ = f(x) with f(t) = 1 - t; only for spectra inside [0, 1].
  SimpleObservable negate() const {
    if (!in_unit_interval()) throw Error(ErrorCode::SpectrumOutsideUnitInterval, "negation needs a spectrum inside [0, 1]");
    return apply_map(PiecewiseMap::reflection());
  }

  bool is_question() const {
    return std::all_of(points_.begin(), points_.end(), [](const Rational& p) { return p == Rational(0) || p == Rational(1); });
  }

  /// x({1}), i.e. the a of q_a. Meaningful when is_question().
  element_type question_element() const { return evaluate(BorelSet::point(1)); }

  static constexpr std::size_t sharpness_scan_cap = 20;

  /// Every x(E) sharp; decided over all 2^k subsets of the spectrum.
  bool is_sharp_observable(std::size_t cap = sharpness_scan_cap) const {
    const std::size_t k = points_.size();
    if (k > cap)
      throw Error(ErrorCode::SpectrumTooLargeForSharpnessScan, "spectrum of size " + std::to_string(k) + " exceeds " + std::to_string(cap));
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      element_type acc = alg_->zero();
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) acc = checked_add(acc, weights_[i]);
      if (!olson::is_sharp(*alg_, acc)) return false;
    }
    return true;
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i) out += ", ";
      out += points_[i].str() + ": " + alg_->describe(weights_[i]);
    }
    return out + "}";
  }

  friend bool operator==(const SimpleObservable& a, const SimpleObservable& b) {
    return a.alg_->id() == b.alg_->id() && a.points_ == b.points_ && a.weights_ == b.weights_;
  }

 private:
  SimpleObservable() = default;

  element_type checked_add(const element_type& a, const element_type& b) const {
    auto s = alg_->add(a, b);
    if (!s) throw Error(ErrorCode::WeightsNotSummable, "sub-sum of a summable family is undefined");
    return *s;
  }

  void rebuild_cumulative() {
    cumulative_.clear();
    cumulative_.push_back(alg_->zero());
    for (const auto& w : weights_) cumulative_.push_back(checked_add(cumulative_.back(), w));
  }

  std::shared_ptr<const A> alg_;
  std::vector<Rational> points_;
  std::vector<element_type> weights_;
  std::vector<element_type> cumulative_;  // cumulative_[i] = a_1 + ... + a_i
};

}  // namespace olson

#endif  // OLSON_OBSERVABLE_SIMPLE_OBSERVABLE_HPP
