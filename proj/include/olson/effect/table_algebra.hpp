#ifndef OLSON_EFFECT_TABLE_ALGEBRA_HPP
#define OLSON_EFFECT_TABLE_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "olson/effect/algebra.hpp"

namespace olson {

/// Finite effect algebra given by its partial-sum table. The axioms are
/// checked exhaustively on construction; order, complements, meets and joins
/// are derived from the table and cached.
class TableAlgebra {
 public:
  using element_type = Tagged<std::uint32_t>;
  using SumTable = std::vector<std::vector<std::optional<std::uint32_t>>>;

  static constexpr std::size_t default_cap = 256;

  TableAlgebra(SumTable table, std::uint32_t zero, std::uint32_t one, std::size_t cap = default_cap)
      : id_(next_algebra_id()), table_(std::move(table)), zero_(zero), one_(one) {
    const std::size_t m = table_.size();
    if (m > cap)
      throw Error(ErrorCode::CarrierTooLarge, "table has " + std::to_string(m) + " elements, cap is " + std::to_string(cap));
    validate();
    derive();
  }

  AlgebraId id() const noexcept { return id_; }
  BackendKind kind() const noexcept { return BackendKind::Table; }
  std::size_t size() const noexcept { return table_.size(); }
  bool is_lattice() const noexcept { return lattice_; }
  const SumTable& table() const noexcept { return table_; }

  element_type zero() const { return {id_, zero_}; }
  element_type one() const { return {id_, one_}; }

  element_type element(std::uint32_t index) const {
    if (index >= size()) throw Error(ErrorCode::ElementNotInCarrier, "index " + std::to_string(index) + " outside the table");
    return {id_, index};
  }

  std::optional<element_type> add(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    auto s = table_[a.value][b.value];
    if (!s) return std::nullopt;
    return element_type{id_, *s};
  }

  element_type complement(const element_type& a) const {
    require_owned(*this, a);
    return {id_, complement_[a.value]};
  }

  bool leq(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return leq_[a.value * size() + b.value];
  }

  std::optional<element_type> meet(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return wrap(meet_[a.value * size() + b.value]);
  }

  std::optional<element_type> join(const element_type& a, const element_type& b) const {
    require_owned(*this, a);
    require_owned(*this, b);
    return wrap(join_[a.value * size() + b.value]);
  }

  std::vector<element_type> enumerate() const {
    std::vector<element_type> out;
    out.reserve(size());
    for (std::uint32_t i = 0; i < size(); ++i) out.push_back({id_, i});
    return out;
  }

  std::string describe(const element_type& a) const {
    require_owned(*this, a);
    return std::to_string(a.value);
  }

 private:
  static constexpr std::int64_t none = -1;

  std::optional<element_type> wrap(std::int64_t v) const {
    if (v == none) return std::nullopt;
    return element_type{id_, static_cast<std::uint32_t>(v)};
  }

  [[noreturn]] static void invalid(const std::string& why) { throw Error(ErrorCode::InvalidAlgebra, why); }

  void validate() const {
    const std::size_t m = table_.size();
    if (m < 2) invalid("a table needs at least two elements");
    if (zero_ >= m || one_ >= m) invalid("zero/one index outside the table");
    if (zero_ == one_) invalid("zero and one coincide");
    for (const auto& row : table_) {
      if (row.size() != m) invalid("sum table is not square");
      for (const auto& cell : row)
        if (cell && *cell >= m) invalid("sum table entry outside the carrier");
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (table_[zero_][a] != static_cast<std::uint32_t>(a)) invalid("zero is not neutral for " + std::to_string(a));
      for (std::size_t b = 0; b < m; ++b)
        if (table_[a][b] != table_[b][a]) invalid("sum is not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        auto ab = table_[a][b];
        if (!ab) continue;
        for (std::size_t c = 0; c < m; ++c) {
          auto ab_c = table_[*ab][c];
          if (!ab_c) continue;
          auto bc = table_[b][c];
          if (!bc || table_[a][*bc] != ab_c)
            invalid("sum is not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
      }
    for (std::size_t a = 0; a < m; ++a) {
      int hits = 0;
      for (std::size_t b = 0; b < m; ++b)
        if (table_[a][b] == one_) ++hits;
      if (hits != 1) invalid("element " + std::to_string(a) + " has " + std::to_string(hits) + " complements");
      if (a != zero_ && table_[a][one_]) invalid("a + 1 is defined for a != 0");
    }
  }

  void derive() {
    const std::size_t m = table_.size();
    complement_.assign(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (table_[a][b] == one_) complement_[a] = static_cast<std::uint32_t>(b);

    leq_.assign(m * m, false);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t c = 0; c < m; ++c)
        if (auto s = table_[a][c]) leq_[a * m + *s] = true;

    std::vector<std::size_t> below(m, 0), above(m, 0);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (leq_[a * m + b]) {
          ++above[a];
          ++below[b];
        }

    meet_.assign(m * m, none);
    join_.assign(m * m, none);
    lattice_ = true;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        // The glb, when it exists, is the lower bound with the largest down-set.
        std::int64_t best = none;
        for (std::size_t c = 0; c < m; ++c)
          if (leq_[c * m + a] && leq_[c * m + b] && (best == none || below[c] > below[best])) best = static_cast<std::int64_t>(c);
        for (std::size_t d = 0; best != none && d < m; ++d)
          if (leq_[d * m + a] && leq_[d * m + b] && !leq_[d * m + best]) best = none;
        meet_[a * m + b] = best;

        best = none;
        for (std::size_t c = 0; c < m; ++c)
          if (leq_[a * m + c] && leq_[b * m + c] && (best == none || above[c] > above[best])) best = static_cast<std::int64_t>(c);
        for (std::size_t d = 0; best != none && d < m; ++d)
          if (leq_[a * m + d] && leq_[b * m + d] && !leq_[best * m + d]) best = none;
        join_[a * m + b] = best;

        if (meet_[a * m + b] == none || join_[a * m + b] == none) lattice_ = false;
      }
  }

  AlgebraId id_;
  SumTable table_;
  std::uint32_t zero_;
  std::uint32_t one_;
  std::vector<std::uint32_t> complement_;
  std::vector<bool> leq_;
  std::vector<std::int64_t> meet_;
  std::vector<std::int64_t> join_;
  bool lattice_ = true;
};

/// Copies a finite backend into table form; element i of the table is
/// alg.enumerate()[i].
template <FiniteEffectAlgebra A>
TableAlgebra tabulate(const A& alg, std::size_t cap = TableAlgebra::default_cap) {
  const auto carrier = alg.enumerate();
  auto index_of = [&](const element_t<A>& e) -> std::uint32_t {
    for (std::size_t i = 0; i < carrier.size(); ++i)
      if (carrier[i] == e) return static_cast<std::uint32_t>(i);
    throw Error(ErrorCode::InvalidAlgebra, "sum leaves the enumerated carrier");
  };
  TableAlgebra::SumTable table(carrier.size(), std::vector<std::optional<std::uint32_t>>(carrier.size()));
  for (std::size_t i = 0; i < carrier.size(); ++i)
    for (std::size_t j = 0; j < carrier.size(); ++j)
      if (auto s = alg.add(carrier[i], carrier[j])) table[i][j] = index_of(*s);
  return TableAlgebra(std::move(table), index_of(alg.zero()), index_of(alg.one()), cap);
}

}  // namespace olson

#endif  // OLSON_EFFECT_TABLE_ALGEBRA_HPP
