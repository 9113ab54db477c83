#include "cyclefree/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

namespace cyclefree {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

std::map<Key, long long> mn_cache;
std::mutex mn_mutex;

std::vector<int> beta_set(const std::vector<int>& lam) {
    int L = static_cast<int>(lam.size());
    std::vector<int> beta(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) beta[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (L - 1 - i);
    return beta; // strictly decreasing
}

std::vector<int> partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < L; ++i) {
        int p = beta[static_cast<size_t>(i)] - (L - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return parts;
}

// mu_rest is the tail of the cycle type still to be removed, largest part
// first.
long long mn_impl(const std::vector<int>& lam, const std::vector<int>& mu_rest) {
    if (lam.empty()) return 1;
    Key key{lam, mu_rest};
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_cache.find(key);
        if (it != mn_cache.end()) return it->second;
    }
    int r = mu_rest[0];
    std::vector<int> tail(mu_rest.begin() + 1, mu_rest.end());
    std::vector<int> beta = beta_set(lam);
    long long total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        if (b < r) continue;
        int lo = b - r;
        bool occupied = false;
        int height = 0; // beta entries strictly between b-r and b = leg length
        for (size_t j = 0; j < beta.size(); ++j) {
            if (beta[j] == lo) occupied = true;
            if (beta[j] > lo && beta[j] < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = lo;
        long long sub = mn_impl(partition_from_beta(std::move(nb)), tail);
        total += (height % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache.emplace(std::move(key), total); // idempotent on races
    return total;
}

std::map<Key, BigInt> kostka_cache;
std::mutex kostka_mutex;

// All nu with lam/nu a horizontal strip of the given size: interlacing
// lam_i >= nu_i >= lam_{i+1}.
void strip_removals(const std::vector<int>& lam, size_t row, int remaining,
                    std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (row == lam.size()) {
        if (remaining == 0) {
            std::vector<int> nu;
            for (int p : cur)
                if (p > 0) nu.push_back(p);
            out.push_back(std::move(nu));
        }
        return;
    }
    int hi = lam[row];
    int lo = (row + 1 < lam.size()) ? lam[row + 1] : 0;
    for (int v = hi; v >= lo; --v) {
        int removed = hi - v;
        if (removed > remaining) break;
        cur.push_back(v);
        strip_removals(lam, row + 1, remaining - removed, cur, out);
        cur.pop_back();
    }
}

BigInt kostka_impl(const std::vector<int>& lam, const std::vector<int>& mu) {
    if (mu.empty()) return lam.empty() ? 1 : 0;
    Key key{lam, mu};
    {
        std::lock_guard<std::mutex> lock(kostka_mutex);
        auto it = kostka_cache.find(key);
        if (it != kostka_cache.end()) return it->second;
    }
    int strip = mu.back();
    std::vector<int> mu_head(mu.begin(), mu.end() - 1);
    std::vector<std::vector<int>> nus;
    std::vector<int> cur;
    strip_removals(lam, 0, strip, cur, nus);
    BigInt total = 0;
    for (const auto& nu : nus) total += kostka_impl(nu, mu_head);
    std::lock_guard<std::mutex> lock(kostka_mutex);
    kostka_cache.emplace(std::move(key), total);
    return total;
}

} // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("mn_character: |lambda| != |mu|");
    return mn_impl(lambda.parts(), mu.parts());
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("kostka: |lambda| != |mu|");
    if (lambda.n() == 0) return 1;
    if (!lambda.dominates(mu)) return 0;
    return kostka_impl(lambda.parts(), mu.parts());
}

} // namespace cyclefree
