#ifndef OLSON_EFFECT_ALGEBRA_HPP
#define OLSON_EFFECT_ALGEBRA_HPP

#include <atomic>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olson/error.hpp"

namespace olson {

/// Identity of one algebra instance. Copies of an algebra share it.
using AlgebraId = std::uint64_t;

inline AlgebraId next_algebra_id() {
  static std::atomic<AlgebraId> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

/// Element value tagged with the algebra that produced it.
template <class Payload>
struct Tagged {
  AlgebraId owner = 0;
  Payload value{};

  friend bool operator==(const Tagged&, const Tagged&) = default;
};

enum class BackendKind { MvChain, SetAlgebra, Table, Tribe, Quotient };

inline std::string to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::MvChain: return "mv_chain";
    case BackendKind::SetAlgebra: return "set_algebra";
    case BackendKind::Table: return "table";
    case BackendKind::Tribe: return "tribe";
    case BackendKind::Quotient: return "quotient";
  }
  return "unknown";
}

/// A backend exposes the partial sum, the orthosupplement, the induced order
/// and, when they exist, binary meets and joins. `add`, `meet` and `join`
/// return nullopt for "undefined" and "does not exist" respectively.
template <class A>
concept EffectAlgebra = requires(const A& alg, const typename A::element_type& a) {
  typename A::element_type;
  { alg.id() } -> std::same_as<AlgebraId>;
  { alg.kind() } -> std::same_as<BackendKind>;
  { alg.zero() } -> std::same_as<typename A::element_type>;
  { alg.one() } -> std::same_as<typename A::element_type>;
  { alg.add(a, a) } -> std::same_as<std::optional<typename A::element_type>>;
  { alg.complement(a) } -> std::same_as<typename A::element_type>;
  { alg.leq(a, a) } -> std::same_as<bool>;
  { alg.meet(a, a) } -> std::same_as<std::optional<typename A::element_type>>;
  { alg.join(a, a) } -> std::same_as<std::optional<typename A::element_type>>;
  { alg.is_lattice() } -> std::same_as<bool>;
  { alg.describe(a) } -> std::same_as<std::string>;
};

template <class A>
concept FiniteEffectAlgebra = EffectAlgebra<A> && requires(const A& alg) {
  { alg.enumerate() } -> std::same_as<std::vector<typename A::element_type>>;
  { alg.size() } -> std::same_as<std::size_t>;
};

template <EffectAlgebra A>
using element_t = typename A::element_type;

/// Throws ElementForeignToAlgebra unless `a` was produced by `alg`.
template <class Alg, class Elem>
void require_owned(const Alg& alg, const Elem& a) {
  if (a.owner != alg.id())
    throw Error(ErrorCode::ElementForeignToAlgebra,
                "element belongs to algebra #" + std::to_string(a.owner) + ", expected #" +
                    std::to_string(alg.id()));
}

/// b ⊖ a, the unique c with a + c = b. Defined only for a ≤ b.
template <EffectAlgebra A>
std::optional<element_t<A>> subtract(const A& alg, const element_t<A>& b, const element_t<A>& a) {
  auto s = alg.add(a, alg.complement(b));
  if (!s) return std::nullopt;
  return alg.complement(*s);
}

template <EffectAlgebra A>
bool is_sharp(const A& alg, const element_t<A>& a) {
  auto m = alg.meet(a, alg.complement(a));
  return m && *m == alg.zero();
}

/// Sum of a list; nullopt as soon as a partial sum is undefined.
template <EffectAlgebra A>
std::optional<element_t<A>> sum(const A& alg, const std::vector<element_t<A>>& items) {
  element_t<A> acc = alg.zero();
  for (const auto& x : items) {
    auto s = alg.add(acc, x);
    if (!s) return std::nullopt;
    acc = *s;
  }
  return acc;
}

/// Greatest lower bound by exhaustive scan of the carrier.
template <FiniteEffectAlgebra A>
std::optional<element_t<A>> scan_meet(const A& alg, const std::vector<element_t<A>>& carrier,
                                      const element_t<A>& a, const element_t<A>& b) {
  std::vector<element_t<A>> lower;
  for (const auto& c : carrier)
    if (alg.leq(c, a) && alg.leq(c, b)) lower.push_back(c);
  for (const auto& c : lower) {
    bool greatest = true;
    for (const auto& d : lower)
      if (!alg.leq(d, c)) {
        greatest = false;
        break;
      }
    if (greatest) return c;
  }
  return std::nullopt;
}

template <FiniteEffectAlgebra A>
std::optional<element_t<A>> scan_join(const A& alg, const std::vector<element_t<A>>& carrier,
                                      const element_t<A>& a, const element_t<A>& b) {
  std::vector<element_t<A>> upper;
  for (const auto& c : carrier)
    if (alg.leq(a, c) && alg.leq(b, c)) upper.push_back(c);
  for (const auto& c : upper) {
    bool least = true;
    for (const auto& d : upper)
      if (!alg.leq(c, d)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

}  // namespace olson

#endif  // OLSON_EFFECT_ALGEBRA_HPP
