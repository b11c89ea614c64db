#include "npslab/bigint.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace npslab {

BigInt big_factorial(int n) {
    if (n < 0)
        throw std::domain_error("factorial of negative number");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

BigInt big_binomial(int n, int k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is a binomial coefficient
    }
    return r;
}

BigInt lcm_upto(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r = boost::integer::lcm(r, BigInt(i));
    return r;
}

std::string decimal_string(const BigRat& value, int significant_digits) {
    const double approx = static_cast<double>(value);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, approx);
    return buf;
}

} // namespace npslab
