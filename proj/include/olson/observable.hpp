#ifndef OLSON_OBSERVABLE_HPP
#define OLSON_OBSERVABLE_HPP

#include "olson/observable/borel_set.hpp"
#include "olson/observable/piecewise_map.hpp"
#include "olson/observable/resolution.hpp"
#include "olson/observable/simple_observable.hpp"

#endif  // OLSON_OBSERVABLE_HPP
