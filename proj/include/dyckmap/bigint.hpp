#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dyckmap {

// Exact arbitrary-precision integer; all counting results use this so
// factorial-scale values never silently overflow.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt double_factorial_odd(unsigned n);  // (2n-1)!!
BigInt binomial(long long n, long long k);
BigInt pow2(unsigned e);

}  // namespace dyckmap
