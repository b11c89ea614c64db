#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace npslab {

// Exact integer/rational arithmetic. Factorials and hook products outgrow
// 64 bits quickly (21! already does), so every count that is computed from
// a formula rather than tallied lives in BigInt.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt big_factorial(int n);
BigInt big_binomial(int n, int k); // 0 whenever k < 0 or k > n
BigInt lcm_upto(int n);            // lcm{1,...,n}; 1 for n <= 1

// Decimal rendering with a fixed number of significant digits, suitable for
// byte-stable reports ("2/3" -> "0.666666666667").
std::string decimal_string(const BigRat& value, int significant_digits = 12);

} // namespace npslab
