#ifndef OLSON_KERNEL_HPP
#define OLSON_KERNEL_HPP

#include "olson/kernel/function.hpp"
#include "olson/kernel/kernel.hpp"

#endif  // OLSON_KERNEL_HPP
