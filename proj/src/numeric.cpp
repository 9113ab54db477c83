#include "cyclefree/numeric.hpp"

namespace cyclefree {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1); // exact at every step
    }
    return r;
}

BigInt falling_factorial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= (n - i);
    return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
    if (n > 64) throw std::overflow_error("binomial_u64: n > 64");
    BigInt b = binomial(n, k);
    return b.convert_to<std::uint64_t>();
}

std::string rational_str(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace cyclefree
