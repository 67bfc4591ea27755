#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace nestwork {

// All counts are exact. The closed forms for the R and T classes are
// binomials of binomials and blow through 64 bits around n = 25.
using BigInt = boost::multiprecision::cpp_int;

// n choose k; zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: the running product is divisible by i!
    }
    return r;
}

}  // namespace nestwork
