#ifndef CYCLEFREE_RNG_HPP
#define CYCLEFREE_RNG_HPP

#include "cyclefree/numeric.hpp"

#include <cstdint>
#include <random>

namespace cyclefree {

// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by
// the standard, and all range reductions here are our own rejection
// sampling, so sequences are reproducible across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform value in [0, bound); bound >= 1. Rejection sampling, no
    // modulo bias.
    std::uint64_t below(std::uint64_t bound);

    // Uniform value in [0, bound) for arbitrary-size bound >= 1.
    BigInt below_big(const BigInt& bound);

private:
    std::mt19937_64 eng_;
};

} // namespace cyclefree

#endif
