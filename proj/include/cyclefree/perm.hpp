#ifndef CYCLEFREE_PERM_HPP
#define CYCLEFREE_PERM_HPP

#include "cyclefree/numeric.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclefree {

// Permutation of {0..n-1} in one-line notation: p[i] is the image of i.
// Text forms are 1-based.
using Perm = std::vector<int>;

bool is_perm(const Perm& p);
Perm identity_perm(int n);

// (a o b)(i) = a[b[i]]
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);

// Orbit sizes, weakly decreasing (includes fixed points).
std::vector<int> cycle_lengths(const Perm& p);

// +1 for even, -1 for odd.
int perm_sign(const Perm& p);

// Exactly one orbit of size >= 2 (the identity is not a cycle).
bool is_single_cycle(const Perm& p);

// Adjacency in the Birkhoff polytope graph: p o q^{-1} is a single cycle.
bool adjacent(const Perm& p, const Perm& q);

// Finite set of permutations of a common n. Members are kept sorted
// lexicographically and must be pairwise distinct.
struct PermSet {
    int n = 0;
    std::vector<Perm> members;

    size_t size() const { return members.size(); }
    bool operator==(const PermSet& o) const { return n == o.n && members == o.members; }
};

// Sorts; throws FormatError on duplicates or non-permutations.
PermSet make_permset(int n, std::vector<Perm> members);

// Text format, bit-exact:
//   PERMSET v1
//   n=<n> count=<k>
//   <pi(1)> ... <pi(n)>   (k lines, 1-based images)
std::string encode_permset(const PermSet& s);
PermSet decode_permset(std::istream& in);
PermSet decode_permset(const std::string& text);

std::string perm_line(const Perm& p); // "2 1 3" style, 1-based

} // namespace cyclefree

#endif
