#ifndef CYCLEFREE_CYCLES_HPP
#define CYCLEFREE_CYCLES_HPP

#include "cyclefree/numeric.hpp"
#include "cyclefree/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cyclefree {

// A simple cycle of the complete bipartite graph K_{n,n}, stored as the
// traversal x_1, y_1, x_2, y_2, ..., x_k, y_k back to x_1. Vertices are
// 0-based in memory; all text forms are 1-based.
//
// Canonical form (unique per cycle subgraph): xs[0] == min(xs) kills the
// rotations, ys[0] < ys[k-1] kills the reflection.
struct SimpleCycle {
    std::vector<int> xs;
    std::vector<int> ys;

    int k() const { return static_cast<int>(xs.size()); }
    bool operator==(const SimpleCycle& o) const { return xs == o.xs && ys == o.ys; }
};

// Distinct xs, distinct ys, equal lengths, 2 <= k <= n, all vertices in
// [0, n). Does not require canonical form.
bool is_valid_traversal(int n, const std::vector<int>& xs, const std::vector<int>& ys);

bool is_canonical(const SimpleCycle& c);

// Number of simple cycles with exactly k left vertices:
//   C(n,k)^2 * k! * (k-1)! / 2
BigInt count_simple_cycles_k(int n, int k);

// Sum over k = 2..n. n=2 -> 1, n=3 -> 15, n=4 -> 204.
BigInt count_simple_cycles(int n);

// Text form "k x1 .. xk y1 .. yk", 1-based.
std::string cycle_to_text(const SimpleCycle& c);
SimpleCycle cycle_from_text(const std::string& line, int n);

// Streams every simple cycle of K_{n,n} exactly once, in canonical form,
// in the fixed order: k ascending, then lexicographic on (xs, ys).
// A stream can be restricted to a single k-stratum with a fixed xs prefix,
// which lets callers split the full enumeration into independent chunks
// (the chunk order k asc / prefix lex matches the global order).
class CycleStream {
public:
    explicit CycleStream(int n);
    CycleStream(int n, int k);
    CycleStream(int n, int k, const std::vector<int>& xs_prefix);

    // Pointer valid until the next call; nullptr when exhausted.
    const SimpleCycle* next();

private:
    bool start_k();
    bool first_xs();
    bool advance_xs();
    bool fill_ys_from(int pos);
    bool advance_ys();

    int n_ = 0;
    int k_lo_ = 0, k_hi_ = 0;
    int k_ = 0;
    int prefix_len_ = 0;
    std::vector<int> prefix_;
    SimpleCycle cur_;
    std::uint64_t used_x_ = 0, used_y_ = 0;
    bool started_ = false;
    bool done_ = false;
};

// Uniform over all simple cycles of K_{n,n}; output is canonical.
// Stratum k is chosen with probability count_k / total via one big-integer
// draw, then the cycle is unranked within the stratum.
SimpleCycle sample_simple_cycle(int n, Rng& rng);
SimpleCycle sample_simple_cycle(int n, std::uint64_t seed);

} // namespace cyclefree

#endif
