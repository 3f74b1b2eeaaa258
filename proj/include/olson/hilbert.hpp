#ifndef OLSON_HILBERT_HPP
#define OLSON_HILBERT_HPP

#include "olson/hilbert/operator.hpp"
#include "olson/hilbert/random.hpp"
#include "olson/hilbert/spectral.hpp"

#endif  // OLSON_HILBERT_HPP
