#ifndef OLSON_EFFECT_HPP
#define OLSON_EFFECT_HPP

#include "olson/effect/algebra.hpp"
#include "olson/effect/mv_chain.hpp"
#include "olson/effect/quotient.hpp"
#include "olson/effect/set_algebra.hpp"
#include "olson/effect/table_algebra.hpp"
#include "olson/effect/tribe.hpp"

#endif  // OLSON_EFFECT_HPP
