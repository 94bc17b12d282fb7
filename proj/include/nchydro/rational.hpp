#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nchydro::specfun {

// Exact rational arithmetic for terminating hypergeometric sums whose
// floating-point evaluation cancels catastrophically. cpp_rational keeps
// values reduced with a positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Correctly scaled conversion; safe when numerator/denominator individually
/// overflow double.
double to_double(const BigRational& q);

}  // namespace nchydro::specfun
