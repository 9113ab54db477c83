#ifndef CYCLEFREE_CHARACTERS_HPP
#define CYCLEFREE_CHARACTERS_HPP

#include "cyclefree/numeric.hpp"
#include "cyclefree/partition.hpp"

namespace cyclefree {

// Irreducible character value chi^lambda(mu) of S_n by the
// Murnaghan-Nakayama rule: border strips of length mu_1 (largest part
// first) are removed via the beta-set representation, with sign (-1)^ht.
// Values are memoized; the cache is safe for concurrent readers/fillers.
long long mn_character(const Partition& lambda, const Partition& mu);

// Kostka number K_{lambda,mu}: semistandard tableaux of shape lambda and
// content mu, counted by peeling horizontal strips (largest entry first).
// Zero unless lambda dominates mu.
BigInt kostka(const Partition& lambda, const Partition& mu);

} // namespace cyclefree

#endif
