#ifndef OLSON_LATTICE_HPP
#define OLSON_LATTICE_HPP

#include "olson/lattice/involution.hpp"
#include "olson/lattice/olson_lattice.hpp"
#include "olson/lattice/olson_order.hpp"

#endif  // OLSON_LATTICE_HPP
