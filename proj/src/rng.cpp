#include "cyclefree/rng.hpp"

#include <stdexcept>

namespace cyclefree {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound 0");
    // Reject the low (2^64 mod bound) values so the kept range is an
    // exact multiple of bound.
    std::uint64_t lim = (0 - bound) % bound;
    for (;;) {
        std::uint64_t v = eng_();
        if (v >= lim) return v % bound;
    }
}

BigInt Rng::below_big(const BigInt& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below_big: bound <= 0");
    if (bound <= std::numeric_limits<std::uint64_t>::max())
        return BigInt(below(bound.convert_to<std::uint64_t>()));
    unsigned bits = boost::multiprecision::msb(bound) + 1;
    for (;;) {
        BigInt v = 0;
        unsigned got = 0;
        while (got < bits) {
            v <<= 64;
            v |= eng_();
            got += 64;
        }
        v >>= (got - bits);
        if (v < bound) return v;
    }
}

} // namespace cyclefree
