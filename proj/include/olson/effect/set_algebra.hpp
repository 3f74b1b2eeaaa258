#ifndef OLSON_EFFECT_SET_ALGEBRA_HPP
#define OLSON_EFFECT_SET_ALGEBRA_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "olson/effect/algebra.hpp"

namespace olson {

/// Bitset over a ground set of at most 64 points; bit i is point i.
using SetBits = std::uint64_t;

inline SetBits full_set(int m) { return m >= 64 ? ~SetBits{0} : ((SetBits{1} << m) - 1); }

inline SetBits make_set(std::initializer_list<int> points) {
  SetBits s = 0;
  for (int p : points) s |= SetBits{1} << p;
  return s;
}

inline std::vector<int> set_members(SetBits s) {
  std::vector<int> out;
  for (int i = 0; s != 0; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

inline std::string describe_set(SetBits s) {
  std::string out = "{";
  bool first = true;
  for (int i : set_members(s)) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

/// Power set of {0, ..., m-1}. Disjoint union is the partial sum.
class SetAlgebra {
 public:
  using element_type = Tagged<SetBits>;

  explicit SetAlgebra(int m) : id_(next_algebra_id()), m_(m), full_(full_set(m)) {
    if (m < 1 || m > 64) throw Error(ErrorCode::InvalidAlgebra, "set_algebra needs 1 <= omega <= 64");
  }

  AlgebraId id() const noexcept { return id_; }
  BackendKind kind() const noexcept { return BackendKind::SetAlgebra; }
  int omega() const noexcept { return m_; }
  bool is_lattice() const noexcept { return true; }
  std::size_t size() const {
    if (m_ > 20) throw Error(ErrorCode::NotEnumerable, "power set too large to enumerate");
    return std::size_t{1} << m_;
  }

  element_type zero() const { return {id_, 0}; }
  element_type one() const { return {id_, full_}; }

  element_type element(SetBits s) const {
    if ((s & ~full_) != 0) throw Error(ErrorCode::SetOutOfRange, describe_set(s) + " is not inside omega");
    return {id_, s};
  }

  std::optional<element_type> add(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    if ((a.value & b.value) != 0) return std::nullopt;
    return element_type{id_, a.value | b.value};
  }

  element_type complement(const element_type& a) const {
    require_owned(*this, a);
    return {id_, full_ & ~a.value};
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

  std::vector<element_type> enumerate() const {
    std::vector<element_type> out;
    out.reserve(size());
    for (SetBits s = 0; s <= full_; ++s) out.push_back({id_, s});
    return out;
  }

  std::string describe(const element_type& a) const {
    require_owned(*this, a);
    return describe_set(a.value);
  }

 private:
  AlgebraId id_;
  int m_;
  SetBits full_;
};

}  // namespace olson

#endif  // OLSON_EFFECT_SET_ALGEBRA_HPP
