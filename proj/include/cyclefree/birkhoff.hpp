#ifndef CYCLEFREE_BIRKHOFF_HPP
#define CYCLEFREE_BIRKHOFF_HPP

#include "cyclefree/labeling.hpp"
#include "cyclefree/numeric.hpp"
#include "cyclefree/perm.hpp"
#include "cyclefree/rng.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclefree {

struct IndependenceReport {
    bool pass = false;
    std::uint64_t pairs_checked = 0;
    // First violating pair in lexicographic order over the sorted member
    // list, plus the cycle structure of their difference.
    std::optional<std::pair<Perm, Perm>> violation;
    std::vector<int> tau_lengths;
};

struct IndepOptions {
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_pairs = 1000000000; // |A|^2 budget for exhaustive mode
    int threads = 0;
};

// Pairwise non-adjacency in the Birkhoff polytope graph.
IndependenceReport verify_independent(const PermSet& a, const IndepOptions& opt);

// Group all of S_n by the matching sum pi -> sum_i gamma(i, pi(i)) and
// return the largest fiber; ties broken by the coordinatewise-smallest
// sum value. Enumeration budget: n <= max_n (default 10).
std::pair<Label, PermSet> best_fiber(const Labeling& g, int max_n = 10);

// Colexicographic rank of the index positions of S within the sorted set
// R; |R| even, |S| = |R|/2, S a subset of R. Ranks fit in 64 bits for
// |R| <= 64.
std::uint64_t subset_rank(const std::vector<int>& R, const std::vector<int>& S);
std::vector<int> subset_unrank(const std::vector<int>& R, std::uint64_t r);

// Dyadic block system on {0..n-1}, n = 2^m: level i has 2^i blocks of
// size 2^(m-i), block j = [j*2^(m-i), (j+1)*2^(m-i)). Level-i checksums
// are taken mod M_i = C(2^(m-i+1), 2^(m-i)).
struct BlockSystem {
    int n = 0;
    int m = 0;
    std::vector<std::uint64_t> moduli; // moduli[i-1] = M_i, i = 1..m
};

BlockSystem make_block_system(int n);

// Membership in the independent set A: at every level i, the ranks of the
// left-child image halves inside their parent images sum to 0 mod M_i.
bool blockset_member(const Perm& p, const BlockSystem& sys);

// Number of leading levels whose checksum vanishes (m = full member).
int blockset_levels_passed(const Perm& p, const BlockSystem& sys);

struct BlocksetEnumeration {
    PermSet set;                           // the full member set A = A_m
    std::vector<std::uint64_t> level_sizes; // |A_i| for i = 1..m
};

// Filters all of S_n; n <= 8.
BlocksetEnumeration blockset_enumerate(const BlockSystem& sys);

// |A| = n! / prod_i M_i, exact.
BigInt blockset_size(const BlockSystem& sys);

// Uniform member of A: per level, free uniform half-subset ranks for all
// blocks but the last, whose rank is forced to cancel the checksum.
Perm blockset_sample(const BlockSystem& sys, Rng& rng);
Perm blockset_sample(const BlockSystem& sys, std::uint64_t seed);

// For tau = pi o pi'^{-1} with pi, pi' agreeing on levels 1..level:
// tau maps one level-`level` block to itself and fixes every other block
// of that level pointwise.
bool block_claim_holds(const Perm& tau, const BlockSystem& sys, int level);

// size <= n! / 2^((n-4)/2), compared exactly (squared for odd n).
bool bound_check(const BigInt& size, int n);

// Exact maximum independent set in the Birkhoff polytope graph by branch
// and bound over all n! vertices; n <= 4. Returns the size and the
// lexicographically first maximum witness.
std::pair<int, std::vector<Perm>> max_independent_exact(int n);

} // namespace cyclefree

#endif
