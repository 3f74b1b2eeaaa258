#ifndef OLSON_EFFECT_QUOTIENT_HPP
#define OLSON_EFFECT_QUOTIENT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "olson/effect/algebra.hpp"
#include "olson/effect/set_algebra.hpp"

namespace olson {

/// The Boolean algebra S/I where S is the power set of {0..m-1} and I is the
/// principal ideal of subsets of a null set N. A class is stored by its
/// canonical representative A \ N.
class QuotientAlgebra {
 public:
  using element_type = Tagged<SetBits>;

  QuotientAlgebra(int omega, SetBits null_set)
      : id_(next_algebra_id()), sets_(std::make_shared<SetAlgebra>(omega)), null_(null_set) {
    if ((null_set & ~full_set(omega)) != 0) throw Error(ErrorCode::SetOutOfRange, "null set is not inside omega");
    if (null_set == full_set(omega)) throw Error(ErrorCode::InvalidAlgebra, "null set equal to omega gives a degenerate quotient");
    live_ = full_set(omega) & ~null_set;
  }

  AlgebraId id() const noexcept { return id_; }
  BackendKind kind() const noexcept { return BackendKind::Quotient; }
  int omega() const noexcept { return sets_->omega(); }
  SetBits null_set() const noexcept { return null_; }
  const SetAlgebra& underlying() const noexcept { return *sets_; }
  std::shared_ptr<const SetAlgebra> underlying_ptr() const noexcept { return sets_; }
  bool is_lattice() const noexcept { return true; }
  std::size_t size() const {
    int live_points = static_cast<int>(set_members(live_).size());
    if (live_points > 20) throw Error(ErrorCode::NotEnumerable, "quotient too large to enumerate");
    return std::size_t{1} << live_points;
  }

  element_type zero() const { return {id_, 0}; }
  element_type one() const { return {id_, live_}; }

  /// h(A): the class of A ⊆ Ω.
  element_type quotient_map(SetBits a) const {
    if ((a & ~full_set(omega())) != 0) throw Error(ErrorCode::SetOutOfRange, describe_set(a) + " is not inside omega");
    return {id_, a & live_};
  }

  element_type quotient_map(const SetAlgebra::element_type& a) const {
    require_owned(*sets_, a);
    return quotient_map(a.value);
  }

  std::optional<element_type> add(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    if ((a.value & b.value) != 0) return std::nullopt;
    return element_type{id_, a.value | b.value};
  }

  element_type complement(const element_type& a) const {
    require_owned(*this, a);
    return {id_, live_ & ~a.value};
  }

  bool leq(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return (a.value & ~b.value) == 0;
  }

  std::optional<element_type> meet(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return element_type{id_, a.value & b.value};
  }

  std::optional<element_type> join(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return element_type{id_, a.value | b.value};
  }

  /// One representative per class, namely every subset of Ω \ N.
  std::vector<element_type> enumerate() const {
    std::vector<element_type> out;
    out.reserve(size());
    // Standard submask walk over live_.
    SetBits s = 0;
    do {
      out.push_back({id_, s});
      s = (s - live_) & live_;
    } while (s != 0);
    return out;
  }

  std::string describe(const element_type& a) const {
    require_owned(*this, a);
    return "[" + describe_set(a.value) + "]";
  }

 private:
  AlgebraId id_;
  std::shared_ptr<const SetAlgebra> sets_;
  SetBits null_;
  SetBits live_ = 0;
};

}  // namespace olson

#endif  // OLSON_EFFECT_QUOTIENT_HPP
