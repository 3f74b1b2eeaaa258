#ifndef OLSON_EFFECT_MV_CHAIN_HPP
#define OLSON_EFFECT_MV_CHAIN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olson/effect/algebra.hpp"
#include "olson/rational.hpp"

namespace olson {

/// The Lukasiewicz chain {0, 1/n, ..., 1} with a ⊕ b = min(a+b, 1) and
/// a* = 1 - a, seen as an effect algebra: a + b is defined iff a ≤ b*.
/// An element stores its numerator k of k/n.
class MvChain {
 public:
  using element_type = Tagged<std::int64_t>;

  explicit MvChain(std::int64_t n) : id_(next_algebra_id()), n_(n) {
    if (n < 1) throw Error(ErrorCode::InvalidAlgebra, "mv_chain needs n >= 1");
  }

  AlgebraId id() const noexcept { return id_; }
  BackendKind kind() const noexcept { return BackendKind::MvChain; }
  std::int64_t denominator() const noexcept { return n_; }
  bool is_lattice() const noexcept { return true; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(n_ + 1); }

  element_type zero() const { return {id_, 0}; }
  element_type one() const { return {id_, n_}; }

  element_type element(std::int64_t k) const {
    if (k < 0 || k > n_) throw Error(ErrorCode::ElementNotInCarrier, "numerator outside [0, n]");
    return {id_, k};
  }

  /// The element equal to r; r must be a multiple of 1/n inside [0, 1].
  element_type element(const Rational& r) const {
    Rational scaled = r * Rational(n_);
    if (scaled.den() != 1) throw Error(ErrorCode::ElementNotInCarrier, r.str() + " is not a multiple of 1/" + std::to_string(n_));
    return element(scaled.num());
  }

  Rational value(const element_type& a) const {
    require_owned(*this, a);
    return Rational(a.value, n_);
  }

  std::optional<element_type> add(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    if (a.value + b.value > n_) return std::nullopt;
    return element_type{id_, a.value + b.value};
  }

  /// Total MV sum min(a + b, 1).
  element_type oplus(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return {id_, std::min(a.value + b.value, n_)};
  }

  element_type complement(const element_type& a) const {
    require_owned(*this, a);
    return {id_, n_ - a.value};
  }

  bool leq(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return a.value <= b.value;
  }

  std::optional<element_type> meet(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return element_type{id_, std::min(a.value, b.value)};
  }

  std::optional<element_type> join(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return element_type{id_, std::max(a.value, b.value)};
  }

  std::vector<element_type> enumerate() const {
    std::vector<element_type> out;
    out.reserve(size());
    for (std::int64_t k = 0; k <= n_; ++k) out.push_back({id_, k});
    return out;
  }

  std::string describe(const element_type& a) const { return value(a).str(); }

 private:
  AlgebraId id_;
  std::int64_t n_;
};

}  // namespace olson

#endif  // OLSON_EFFECT_MV_CHAIN_HPP
