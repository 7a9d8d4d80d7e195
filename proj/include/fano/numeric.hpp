#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fano {

/// Exact arbitrary-precision integer used for every coefficient and
/// dimension in the library. Nothing here is ever floating point.
using Int = boost::multiprecision::cpp_int;

/// Exact rational, used for slopes and the intermediate terms of
/// Riemann-Roch (the thirds and quarters cancel only in combination).
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Generalized binomial coefficient n over k, with n any integer.
/// Needed by the total-Chern twist expansion, where "rank minus i"
/// may be negative.
Int choose(const Int& n, unsigned k);

}  // namespace fano
