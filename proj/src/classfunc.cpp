#include "cyclefree/classfunc.hpp"

#include "cyclefree/characters.hpp"

#include <algorithm>
#include <cmath>

namespace cyclefree {

ClassFunction phi_from_set(const PermSet& a) {
    if (a.members.empty()) throw std::invalid_argument("phi_from_set: empty set");
    size_t sz = a.members.size();
    if (static_cast<std::uint64_t>(sz) * sz > 100000000ull)
        throw BudgetError("phi_from_set: |A|^2 exceeds the pair budget");
    std::map<Partition, std::uint64_t> counts;
    for (size_t i = 0; i < sz; ++i) {
        Perm inv_i = inverse(a.members[i]);
        for (size_t j = 0; j < sz; ++j)
            ++counts[cycle_type(compose(a.members[j], inv_i))];
    }
    ClassFunction phi;
    phi.n = a.n;
    BigInt denom = BigInt(sz) * sz;
    for (const auto& [type, c] : counts) phi.values[type] = Rational(BigInt(c), denom);
    return phi;
}

Rational chi_on_phi(const Partition& lambda, const ClassFunction& phi) {
    Rational total = 0;
    for (const auto& [mu, v] : phi.values) total += v * mn_character(lambda, mu);
    return total;
}

Rational ip_characters(const ClassFunction& phi) {
    Rational total = 0;
    for (int m = 0; m < phi.n; ++m) {
        Rational term = chi_on_phi(Partition::hook(phi.n, m), phi);
        if (m % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Rational ip_direct(const PermSet& a) {
    size_t sz = a.members.size();
    if (sz == 0) throw std::invalid_argument("ip_direct: empty set");
    if (static_cast<std::uint64_t>(sz) * sz > 100000000ull)
        throw BudgetError("ip_direct: |A|^2 exceeds the pair budget");
    std::uint64_t ncycles = 0;
    for (size_t i = 0; i < sz; ++i) {
        Perm inv_i = inverse(a.members[i]);
        for (size_t j = 0; j < sz; ++j) {
            std::vector<int> lens = cycle_lengths(compose(a.members[j], inv_i));
            if (lens.size() == 1 && lens[0] == a.n) ++ncycles;
        }
    }
    return Rational(BigInt(a.n) * ncycles, BigInt(sz) * sz);
}

namespace {

struct TupleStats {
    BigInt sum_sq = 0;       // sum over (I, J) of count^2
    std::uint64_t max_count = 0;
};

// Rank of the image tuple under pi is not needed; equal images are found
// by sorting the per-I image list. Walks every ordered k-tuple I of
// distinct points.
void tuple_scan(const PermSet& a, int k, TupleStats& st) {
    int n = a.n;
    size_t sz = a.members.size();
    std::vector<int> tuple(static_cast<size_t>(k));
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<std::vector<int>> images(sz, std::vector<int>(static_cast<size_t>(k)));

    auto leaf = [&]() {
        for (size_t t = 0; t < sz; ++t)
            for (int j = 0; j < k; ++j)
                images[t][static_cast<size_t>(j)] =
                    a.members[t][static_cast<size_t>(tuple[static_cast<size_t>(j)])];
        std::sort(images.begin(), images.end());
        size_t run = 1;
        for (size_t t = 1; t <= sz; ++t) {
            if (t < sz && images[t] == images[t - 1]) {
                ++run;
            } else {
                st.sum_sq += BigInt(run) * run;
                st.max_count = std::max<std::uint64_t>(st.max_count, run);
                run = 1;
            }
        }
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            leaf();
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<size_t>(v)]) continue;
            used[static_cast<size_t>(v)] = 1;
            tuple[static_cast<size_t>(depth)] = v;
            self(self, depth + 1);
            used[static_cast<size_t>(v)] = 0;
        }
    };
    rec(rec, 0);
}

void tuple_budget(const PermSet& a, int k) {
    BigInt table = falling_factorial(static_cast<unsigned>(a.n), static_cast<unsigned>(k));
    if (table * table > 100000000)
        throw BudgetError("tuple table (n)_k^2 exceeds the budget");
}

} // namespace

Rational young_trace(const PermSet& a, int k) {
    if (a.members.empty()) throw std::invalid_argument("young_trace: empty set");
    if (k < 0 || k > a.n) throw std::invalid_argument("young_trace: k out of range");
    if (k == 0) return 1;
    tuple_budget(a, k);
    TupleStats st;
    tuple_scan(a, k, st);
    BigInt denom = BigInt(a.members.size()) * a.members.size();
    return Rational(st.sum_sq, denom);
}

Uniformity uniformity(const PermSet& a, int m) {
    if (a.members.empty()) throw std::invalid_argument("uniformity: empty set");
    if (m < 1 || m >= a.n) throw std::invalid_argument("uniformity: need 1 <= m < n");
    tuple_budget(a, m);
    TupleStats st;
    tuple_scan(a, m, st);
    Uniformity u;
    u.max_prob = Rational(BigInt(st.max_count), BigInt(a.members.size()));
    Rational scaled = u.max_prob * falling_factorial(static_cast<unsigned>(a.n), static_cast<unsigned>(m));
    double val = boost::multiprecision::numerator(scaled).convert_to<double>() /
                 boost::multiprecision::denominator(scaled).convert_to<double>();
    u.c_emp = std::pow(val, 1.0 / m);
    return u;
}

int set_sign(const PermSet& a) {
    if (a.members.empty()) throw std::invalid_argument("set_sign: empty set");
    int s = perm_sign(a.members[0]);
    for (const Perm& p : a.members)
        if (perm_sign(p) != s) return 0;
    return s;
}

bool duality_check(const PermSet& a) {
    if (set_sign(a) == 0) throw std::invalid_argument("duality_check: mixed-sign set");
    ClassFunction phi = phi_from_set(a);
    for (int m = 1; m <= a.n - 1; ++m) {
        if (chi_on_phi(Partition::hook(a.n, m), phi) !=
            chi_on_phi(Partition::hook(a.n, a.n - 1 - m), phi))
            return false;
    }
    return true;
}

double series_bound(double c, int n, int terms) {
    if (terms < 0) throw std::invalid_argument("series_bound: terms < 0");
    double sum = 0.0;
    for (int t = 1; t <= terms; ++t) {
        int m = 2 * t - 1;
        double num, den;
        if (n >= 8 && m == 3) {
            // Sharper second term available from k = 8.
            num = std::pow(c, 8) - 1.0;
            den = 56.0; // C(8,3)
        } else {
            num = std::pow(c, 2 * m) - 1.0;
            den = binomial(static_cast<unsigned>(2 * m), static_cast<unsigned>(m)).convert_to<double>();
        }
        sum += num / den;
    }
    return 1.0 - sum;
}

} // namespace cyclefree
