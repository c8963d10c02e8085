#include "dyckmap/bigint.hpp"

namespace dyckmap {

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt double_factorial_odd(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 1; i + 1 <= 2 * n; i += 2) out *= i;
    return out;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (long long i = 1; i <= k; ++i) {
        out *= n - k + i;
        out /= i;  // exact at every step
    }
    return out;
}

BigInt pow2(unsigned e) {
    return BigInt(1) << e;
}

}  // namespace dyckmap
