#ifndef OLSON_KERNEL_FUNCTION_HPP
#define OLSON_KERNEL_FUNCTION_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "olson/effect/quotient.hpp"
#include "olson/effect/set_algebra.hpp"
#include "olson/observable/simple_observable.hpp"

namespace olson {

/// A real function on the finite set {0..m-1} with rational values.
struct MeasurableFunction {
  std::vector<Rational> values;

  int size() const noexcept { return static_cast<int>(values.size()); }
  const Rational& operator()(int w) const { return values[static_cast<std::size_t>(w)]; }

  friend bool operator==(const MeasurableFunction&, const MeasurableFunction&) = default;
};

inline void require_domain(const MeasurableFunction& f, int omega) {
  if (f.size() != omega)
    throw Error(ErrorCode::DomainMismatch,
                "function has " + std::to_string(f.size()) + " values, domain has " + std::to_string(omega) + " points");
}

inline void require_same_domain(const MeasurableFunction& f, const MeasurableFunction& g) { require_domain(g, f.size()); }

/// Level sets {ω : f(ω) = v}, keyed by v in increasing order.
inline std::map<Rational, SetBits> level_sets(const MeasurableFunction& f) {
  std::map<Rational, SetBits> out;
  for (int w = 0; w < f.size(); ++w) out[f(w)] |= SetBits{1} << w;
  return out;
}

/// x_f(E) = f⁻¹(E).
inline SimpleObservable<SetAlgebra> observable_from_function(const std::shared_ptr<const SetAlgebra>& s,
                                                             const MeasurableFunction& f) {
  require_domain(f, s->omega());
  std::vector<Rational> points;
  std::vector<SetAlgebra::element_type> weights;
  for (const auto& [v, set] : level_sets(f)) {
    points.push_back(v);
    weights.push_back(s->element(set));
  }
  return SimpleObservable<SetAlgebra>::from_weights(s, std::move(points), std::move(weights));
}

/// The unique f with x = x_f: each point takes the spectrum value whose
/// weight contains it.
inline MeasurableFunction function_from_observable(const SimpleObservable<SetAlgebra>& x) {
  MeasurableFunction f{std::vector<Rational>(static_cast<std::size_t>(x.algebra().omega()))};
  for (std::size_t i = 0; i < x.points().size(); ++i)
    for (int w : set_members(x.weights()[i].value)) f.values[static_cast<std::size_t>(w)] = x.points()[i];
  return f;
}

/// f ≤ g pointwise.
inline bool function_order_oracle(const MeasurableFunction& f, const MeasurableFunction& g) {
  require_same_domain(f, g);
  for (int w = 0; w < f.size(); ++w)
    if (g(w) < f(w)) return false;
  return true;
}

inline MeasurableFunction pointwise_min(const MeasurableFunction& f, const MeasurableFunction& g) {
  require_same_domain(f, g);
  MeasurableFunction h = f;
  for (int w = 0; w < f.size(); ++w) h.values[static_cast<std::size_t>(w)] = std::min(f(w), g(w));
  return h;
}

inline MeasurableFunction pointwise_max(const MeasurableFunction& f, const MeasurableFunction& g) {
  require_same_domain(f, g);
  MeasurableFunction h = f;
  for (int w = 0; w < f.size(); ++w) h.values[static_cast<std::size_t>(w)] = std::max(f(w), g(w));
  return h;
}

/// h ∘ f⁻¹ on the quotient S/N. Values taken only on N disappear from the
/// spectrum.
inline SimpleObservable<QuotientAlgebra> pushforward(const std::shared_ptr<const QuotientAlgebra>& q,
                                                     const MeasurableFunction& f) {
  require_domain(f, q->omega());
  std::vector<Rational> points;
  std::vector<QuotientAlgebra::element_type> weights;
  for (const auto& [v, set] : level_sets(f)) {
    points.push_back(v);
    weights.push_back(q->quotient_map(set));
  }
  return SimpleObservable<QuotientAlgebra>::from_weights(q, std::move(points), std::move(weights));
}

/// {ω : g(ω) < f(ω)} ⊆ N.
inline bool quotient_order_criterion(const QuotientAlgebra& q, const MeasurableFunction& f, const MeasurableFunction& g) {
  require_domain(f, q.omega());
  require_same_domain(f, g);
  for (int w = 0; w < f.size(); ++w)
    if (g(w) < f(w) && !(q.null_set() & (SetBits{1} << w))) return false;
  return true;
}

}  // namespace olson

#endif  // OLSON_KERNEL_FUNCTION_HPP
