#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cfactors {

// All coefficient arithmetic is exact: arbitrary-precision integers for
// Schur-basis coefficients and character values, exact rationals for
// power-sum coefficients and over-count factors.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

}  // namespace cfactors
