#ifndef CYCLEFREE_CLASSFUNC_HPP
#define CYCLEFREE_CLASSFUNC_HPP

#include "cyclefree/numeric.hpp"
#include "cyclefree/partition.hpp"
#include "cyclefree/perm.hpp"

#include <map>

namespace cyclefree {

// Class function on S_n stored by cycle type. For phi_from_set the value
// at mu is the probability that a uniform ordered pair (pi, pi') from
// A^2 has pi o pi'^{-1} of type mu; values sum to 1.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rational> values;
};

// |A|^2 pair budget 10^8.
ClassFunction phi_from_set(const PermSet& a);

// sum_mu phi(mu) * chi^lambda(mu); equals the normalized trace of the
// lambda-isotypic block, hence >= 0 for conjugation-averaged phi.
Rational chi_on_phi(const Partition& lambda, const ClassFunction& phi);

// sum_{m=0}^{n-1} (-1)^m chi_on_phi(hook(n,m), phi). With the inner
// product on class functions normalized as <f,g> = n! sum_pi f_pi g_pi,
// this equals <phi, psi> for psi uniform on the n-cycle class.
Rational ip_characters(const ClassFunction& phi);

// n * Pr[pi o pi'^{-1} is an n-cycle], computed straight from the pairs.
Rational ip_direct(const PermSet& a);

// sum over ordered k-tuples I, J of Pr[pi(I) = J]^2, exact.
// Budget: (n)_k^2 <= 10^8.
Rational young_trace(const PermSet& a, int k);

struct Uniformity {
    Rational max_prob; // max over I, J of Pr[pi(I) = J]
    double c_emp;      // (max_prob * (n)_m)^(1/m)
};

// 1 <= m < n, same tuple budget as young_trace.
Uniformity uniformity(const PermSet& a, int m);

// +1 all even, -1 all odd, 0 mixed.
int set_sign(const PermSet& a);

// chi^{hook(m)}(phi_A) == chi^{hook(n-1-m)}(phi_A) for all 1 <= m <= n-1.
// Requires a one-sign set (throws std::invalid_argument on mixed signs).
bool duality_check(const PermSet& a);

// 1 - sum over the first `terms` odd m of (c^{2m} - 1) / C(2m, m).
// For n >= 8 the m = 3 term is replaced by (c^8 - 1) / C(8,3).
double series_bound(double c, int n, int terms);

} // namespace cyclefree

#endif
