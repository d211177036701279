#pragma once

// Exact arithmetic used throughout. Counts and character values never
// wrap: everything multiplicity-like is a cpp_int, and inner products
// run over cpp_rational so integrality can be asserted at the end
// instead of assumed.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>

namespace foulkes {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(int n);

inline bool fits_int64(const Int& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline bool is_integral(const Rat& r) { return denominator(r) == 1; }

}  // namespace foulkes
