#ifndef OLSON_TESTS_SUPPORT_HPP
#define OLSON_TESTS_SUPPORT_HPP

#include <memory>
#include <string>
#include <vector>

#include "olson/effect.hpp"

namespace olson::testing {

/// Fuzzy sets on three points with values in thirds and f0 + f1 = 2 f2.
/// Eight elements; (0,2/3,1/3) and (1/3,1/3,1/3) have two minimal upper
/// bounds, so this effect-tribe is not a lattice.
inline std::shared_ptr<FiniteTribe> non_lattice_tribe() {
  return std::make_shared<FiniteTribe>(3, 3, std::vector<FiniteTribe::Constraint>{{1, 1, -2}});
}

inline std::shared_ptr<TableAlgebra> non_lattice_table() {
  return std::make_shared<TableAlgebra>(tabulate(*non_lattice_tribe()));
}

/// Diamond {0, a, a', 1} with a + a' = 1: the four-element Boolean algebra
/// written as a table.
inline std::shared_ptr<TableAlgebra> diamond_table() {
  TableAlgebra::SumTable t(4, std::vector<std::optional<std::uint32_t>>(4));
  for (std::uint32_t i = 0; i < 4; ++i) t[0][i] = t[i][0] = i;
  t[1][2] = t[2][1] = 3;
  return std::make_shared<TableAlgebra>(t, 0, 3);
}

}  // namespace olson::testing

#endif  // OLSON_TESTS_SUPPORT_HPP
