#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symcoh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Int to_integer(const Rat& q) { return numerator(q); }

inline Int floor_int(const Rat& q) {
    Int n = numerator(q), d = denominator(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int ceil_int(const Rat& q) { return -floor_int(-q); }

inline int sgn(const Rat& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

// Largest integer z with z < q (strict).
inline Int strict_floor(const Rat& q) {
    return is_integer(q) ? to_integer(q) - 1 : floor_int(q);
}

}  // namespace symcoh
