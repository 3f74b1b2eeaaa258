#ifndef OLSON_EFFECT_TRIBE_HPP
#define OLSON_EFFECT_TRIBE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "olson/effect/algebra.hpp"
#include "olson/rational.hpp"

namespace olson {

/// Fuzzy sets f: {0..m-1} -> {0, 1/den, ..., 1} with pointwise operations.
///
/// Without constraints this is the full tribe on the finite grid: an
/// MV-algebra whose meets and joins are pointwise min and max. With balance
/// constraints sum_w c(w) f(w) = 0 (each c summing to zero, so the carrier is
/// closed under f -> 1 - f and under defined sums) it is an effect-tribe that
/// in general is not closed under min; meets and joins are then searched in
/// the carrier and may fail to exist.
class FiniteTribe {
 public:
  using element_type = Tagged<std::vector<std::int64_t>>;
  using Constraint = std::vector<std::int64_t>;

  static constexpr std::size_t enumeration_cap = 1u << 20;

  FiniteTribe(int omega, std::int64_t den, std::vector<Constraint> constraints = {})
      : id_(next_algebra_id()), m_(omega), den_(den), constraints_(std::move(constraints)) {
    if (omega < 1) throw Error(ErrorCode::InvalidAlgebra, "tribe needs omega >= 1");
    if (den < 1) throw Error(ErrorCode::InvalidAlgebra, "tribe needs den >= 1");
    for (const auto& c : constraints_) {
      if (static_cast<int>(c.size()) != m_) throw Error(ErrorCode::InvalidAlgebra, "constraint length differs from omega");
      if (std::accumulate(c.begin(), c.end(), std::int64_t{0}) != 0)
        throw Error(ErrorCode::InvalidAlgebra, "constraint coefficients must sum to zero");
    }
    if (!constraints_.empty()) {
      carrier_ = build_carrier();
      lattice_ = true;
      for (std::size_t i = 0; i < carrier_.size() && lattice_; ++i)
        for (std::size_t j = i + 1; j < carrier_.size() && lattice_; ++j)
          if (!scan_meet(*this, carrier_, carrier_[i], carrier_[j]) || !scan_join(*this, carrier_, carrier_[i], carrier_[j]))
            lattice_ = false;
    }
  }

  AlgebraId id() const noexcept { return id_; }
  BackendKind kind() const noexcept { return BackendKind::Tribe; }
  int omega() const noexcept { return m_; }
  std::int64_t denominator() const noexcept { return den_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  bool is_effect_tribe_only() const noexcept { return !constraints_.empty(); }
  bool is_lattice() const noexcept { return lattice_; }

  std::size_t size() const {
    if (!constraints_.empty()) return carrier_.size();
    std::size_t count = 1;
    for (int i = 0; i < m_; ++i) {
      count *= static_cast<std::size_t>(den_ + 1);
      if (count > enumeration_cap) throw Error(ErrorCode::NotEnumerable, "tribe carrier exceeds the enumeration cap");
    }
    return count;
  }

  element_type zero() const { return {id_, std::vector<std::int64_t>(m_, 0)}; }
  element_type one() const { return {id_, std::vector<std::int64_t>(m_, den_)}; }

  element_type element(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != m_)
      throw Error(ErrorCode::ElementNotInCarrier, "tribe element needs " + std::to_string(m_) + " values");
    std::vector<std::int64_t> ks;
    ks.reserve(values.size());
    for (const auto& v : values) {
      Rational scaled = v * Rational(den_);
      if (scaled.den() != 1 || scaled.num() < 0 || scaled.num() > den_)
        throw Error(ErrorCode::ElementNotInCarrier, v.str() + " is not a value in {k/" + std::to_string(den_) + "}");
      ks.push_back(scaled.num());
    }
    return from_numerators(std::move(ks));
  }

  element_type from_numerators(std::vector<std::int64_t> ks) const {
    if (static_cast<int>(ks.size()) != m_) throw Error(ErrorCode::ElementNotInCarrier, "wrong tribe element length");
    for (auto k : ks)
      if (k < 0 || k > den_) throw Error(ErrorCode::ElementNotInCarrier, "tribe value outside [0, 1]");
    if (!satisfies_constraints(ks)) throw Error(ErrorCode::ElementNotInCarrier, "function violates the effect-tribe constraints");
    return {id_, std::move(ks)};
  }

  /// True when the values (granular or not) name a carrier element.
  bool contains(const std::vector<Rational>& values) const {
    try {
      element(values);
      return true;
    } catch (const Error&) {
      return false;
    }
  }

  Rational value(const element_type& a, int point) const {
    require_owned(*this, a);
    return Rational(a.value.at(point), den_);
  }

  std::optional<element_type> add(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    std::vector<std::int64_t> s(m_);
    for (int i = 0; i < m_; ++i) {
      s[i] = a.value[i] + b.value[i];
      if (s[i] > den_) return std::nullopt;
    }
    return element_type{id_, std::move(s)};
  }

  element_type complement(const element_type& a) const {
    require_owned(*this, a);
    std::vector<std::int64_t> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = den_ - a.value[i];
    return {id_, std::move(c)};
  }

  /// Pointwise order. For the constrained carrier this still equals the
  /// induced order because g - f satisfies every balance constraint.
  bool leq(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    for (int i = 0; i < m_; ++i)
      if (a.value[i] > b.value[i]) return false;
    return true;
  }

  std::optional<element_type> meet(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    if (!constraints_.empty()) return scan_meet(*this, carrier_, a, b);
    std::vector<std::int64_t> r(m_);
    for (int i = 0; i < m_; ++i) r[i] = std::min(a.value[i], b.value[i]);
    return element_type{id_, std::move(r)};
  }

  std::optional<element_type> join(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    if (!constraints_.empty()) return scan_join(*this, carrier_, a, b);
    std::vector<std::int64_t> r(m_);
    for (int i = 0; i < m_; ++i) r[i] = std::max(a.value[i], b.value[i]);
    return element_type{id_, std::move(r)};
  }

  std::vector<element_type> enumerate() const {
    if (!constraints_.empty()) return carrier_;
    size();  // cap check
    return build_carrier();
  }

  std::string describe(const element_type& a) const {
    require_owned(*this, a);
    std::string out = "(";
    for (int i = 0; i < m_; ++i) {
      if (i) out += ",";
      out += Rational(a.value[i], den_).str();
    }
    return out + ")";
  }

 private:
  bool satisfies_constraints(const std::vector<std::int64_t>& ks) const {
    for (const auto& c : constraints_) {
      std::int64_t s = 0;
      for (int i = 0; i < m_; ++i) s += c[i] * ks[i];
      if (s != 0) return false;
    }
    return true;
  }

  std::vector<element_type> build_carrier() const {
    std::vector<element_type> out;
    std::vector<std::int64_t> ks(m_, 0);
    std::size_t visited = 0;
    while (true) {
      if (++visited > enumeration_cap) throw Error(ErrorCode::NotEnumerable, "tribe carrier exceeds the enumeration cap");
      if (satisfies_constraints(ks)) out.push_back({id_, ks});
      int i = m_ - 1;
      while (i >= 0 && ks[i] == den_) ks[i--] = 0;
      if (i < 0) break;
      ++ks[i];
    }
    return out;
  }

  AlgebraId id_;
  int m_;
  std::int64_t den_;
  std::vector<Constraint> constraints_;
  std::vector<element_type> carrier_;
  bool lattice_ = true;
};

}  // namespace olson

#endif  // OLSON_EFFECT_TRIBE_HPP
