#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ekr {

// Exact integer/rational types used wherever a count or bound must not round.
// Floating point is reserved for probabilities and asymptotic calculators.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace ekr
