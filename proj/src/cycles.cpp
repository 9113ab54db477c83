#include "cyclefree/cycles.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cyclefree {

namespace {

// Lowest free value >= from, or -1. mask holds the used values.
inline int lowest_free(std::uint64_t used, int n, int from) {
    if (from >= n) return -1;
    std::uint64_t cand = ~used & (~std::uint64_t{0} << from);
    if (n < 64) cand &= (std::uint64_t{1} << n) - 1;
    if (cand == 0) return -1;
    return std::countr_zero(cand);
}

} // namespace

bool is_valid_traversal(int n, const std::vector<int>& xs, const std::vector<int>& ys) {
    size_t k = xs.size();
    if (k != ys.size() || k < 2 || k > static_cast<size_t>(n)) return false;
    std::vector<char> seen_x(static_cast<size_t>(n), 0), seen_y(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < k; ++i) {
        int x = xs[i], y = ys[i];
        if (x < 0 || x >= n || y < 0 || y >= n) return false;
        if (seen_x[static_cast<size_t>(x)] || seen_y[static_cast<size_t>(y)]) return false;
        seen_x[static_cast<size_t>(x)] = 1;
        seen_y[static_cast<size_t>(y)] = 1;
    }
    return true;
}

bool is_canonical(const SimpleCycle& c) {
    if (c.xs.empty()) return false;
    if (*std::min_element(c.xs.begin(), c.xs.end()) != c.xs[0]) return false;
    return c.ys.front() < c.ys.back();
}

BigInt count_simple_cycles_k(int n, int k) {
    if (k < 2 || k > n) return 0;
    BigInt c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    return c * c * factorial(static_cast<unsigned>(k)) *
           factorial(static_cast<unsigned>(k - 1)) / 2;
}

BigInt count_simple_cycles(int n) {
    BigInt total = 0;
    for (int k = 2; k <= n; ++k) total += count_simple_cycles_k(n, k);
    return total;
}

std::string cycle_to_text(const SimpleCycle& c) {
    std::ostringstream os;
    os << c.k();
    for (int x : c.xs) os << ' ' << x + 1;
    for (int y : c.ys) os << ' ' << y + 1;
    return os.str();
}

SimpleCycle cycle_from_text(const std::string& line, int n) {
    std::istringstream is(line);
    int k = 0;
    if (!(is >> k)) throw FormatError("cycle: missing length");
    if (k < 2 || k > n) throw FormatError("cycle: length out of range");
    SimpleCycle c;
    c.xs.resize(static_cast<size_t>(k));
    c.ys.resize(static_cast<size_t>(k));
    for (int i = 0; i < 2 * k; ++i) {
        int v = 0;
        if (!(is >> v)) throw FormatError("cycle: truncated vertex list");
        if (v < 1 || v > n) throw FormatError("cycle: vertex out of range");
        (i < k ? c.xs[static_cast<size_t>(i)] : c.ys[static_cast<size_t>(i - k)]) = v - 1;
    }
    int extra = 0;
    if (is >> extra) throw FormatError("cycle: trailing tokens");
    if (!is_valid_traversal(n, c.xs, c.ys)) throw FormatError("cycle: repeated vertex");
    return c;
}

CycleStream::CycleStream(int n) : n_(n), k_lo_(2), k_hi_(n) {
    if (n < 2 || n > 62) throw std::invalid_argument("CycleStream: n out of range");
}

CycleStream::CycleStream(int n, int k) : CycleStream(n, k, {}) {}

CycleStream::CycleStream(int n, int k, const std::vector<int>& xs_prefix)
    : n_(n), k_lo_(k), k_hi_(k), prefix_len_(static_cast<int>(xs_prefix.size())),
      prefix_(xs_prefix) {
    if (n < 2 || n > 62) throw std::invalid_argument("CycleStream: n out of range");
    if (k < 2 || k > n) throw std::invalid_argument("CycleStream: k out of range");
    if (prefix_len_ > k) throw std::invalid_argument("CycleStream: prefix too long");
    for (int i = 0; i < prefix_len_; ++i) {
        int v = prefix_[static_cast<size_t>(i)];
        if (v < 0 || v >= n) throw std::invalid_argument("CycleStream: prefix value");
        for (int j = 0; j < i; ++j)
            if (prefix_[static_cast<size_t>(j)] == v)
                throw std::invalid_argument("CycleStream: prefix repeat");
        if (i > 0 && v < prefix_[0]) throw std::invalid_argument("CycleStream: prefix not anchored");
    }
}

// Initial xs for the current k: the prefix, then the smallest admissible
// values. Position 0 is the minimum of the whole sequence, so later
// positions only take values above xs[0], and position 0 itself must
// leave k-1 values above it (xs[0] <= n-k). Returns false when the
// stratum is empty.
bool CycleStream::first_xs() {
    cur_.xs.assign(static_cast<size_t>(k_), -1);
    used_x_ = 0;
    for (int i = 0; i < prefix_len_; ++i) {
        cur_.xs[static_cast<size_t>(i)] = prefix_[static_cast<size_t>(i)];
        used_x_ |= std::uint64_t{1} << prefix_[static_cast<size_t>(i)];
    }
    if (prefix_len_ > 0 && prefix_[0] > n_ - k_) return false;
    for (int t = prefix_len_; t < k_; ++t) {
        int from = (t == 0) ? 0 : cur_.xs[0] + 1;
        int w = lowest_free(used_x_, n_, from);
        if (t == 0 && (w < 0 || w > n_ - k_)) return false;
        if (w < 0) return false;
        cur_.xs[static_cast<size_t>(t)] = w;
        used_x_ |= std::uint64_t{1} << w;
    }
    return true;
}

bool CycleStream::advance_xs() {
    int pos = k_ - 1;
    for (;;) {
        if (pos < prefix_len_) return false;
        used_x_ &= ~(std::uint64_t{1} << cur_.xs[static_cast<size_t>(pos)]);
        int w = lowest_free(used_x_, n_, cur_.xs[static_cast<size_t>(pos)] + 1);
        if (pos == 0 && w > n_ - k_) w = -1;
        if (w < 0) {
            --pos;
            continue;
        }
        cur_.xs[static_cast<size_t>(pos)] = w;
        used_x_ |= std::uint64_t{1} << w;
        bool ok = true;
        for (int t = pos + 1; t < k_; ++t) {
            int v = lowest_free(used_x_, n_, cur_.xs[0] + 1);
            if (v < 0) {
                for (int u = t - 1; u > pos; --u)
                    used_x_ &= ~(std::uint64_t{1} << cur_.xs[static_cast<size_t>(u)]);
                ok = false;
                break;
            }
            cur_.xs[static_cast<size_t>(t)] = v;
            used_x_ |= std::uint64_t{1} << v;
        }
        if (ok) return true;
        // No room above xs[0]; only moving an earlier position can help.
    }
}

// Fill ys[t0..k-1] with the lexicographically smallest completion.
// Position k-1 additionally needs a value above ys[0]. On failure the
// partial fill is unwound and used_y_ is unchanged.
bool CycleStream::fill_ys_from(int pos) {
    for (int t = pos; t < k_; ++t) {
        int from = (t == k_ - 1) ? cur_.ys[0] + 1 : 0;
        int w = lowest_free(used_y_, n_, from);
        if (w < 0) {
            for (int u = t - 1; u >= pos; --u)
                used_y_ &= ~(std::uint64_t{1} << cur_.ys[static_cast<size_t>(u)]);
            return false;
        }
        cur_.ys[static_cast<size_t>(t)] = w;
        used_y_ |= std::uint64_t{1} << w;
    }
    return true;
}

bool CycleStream::advance_ys() {
    int pos = k_ - 1;
    for (;;) {
        if (pos < 0) return false;
        used_y_ &= ~(std::uint64_t{1} << cur_.ys[static_cast<size_t>(pos)]);
        int from = cur_.ys[static_cast<size_t>(pos)] + 1;
        if (pos == k_ - 1 && from <= cur_.ys[0]) from = cur_.ys[0] + 1;
        int w = lowest_free(used_y_, n_, from);
        if (w < 0) {
            --pos;
            continue;
        }
        cur_.ys[static_cast<size_t>(pos)] = w;
        used_y_ |= std::uint64_t{1} << w;
        if (pos == k_ - 1) return true;
        if (fill_ys_from(pos + 1)) return true;
    }
}

bool CycleStream::start_k() {
    if (!first_xs()) return false;
    cur_.ys.assign(static_cast<size_t>(k_), -1);
    used_y_ = 0;
    return fill_ys_from(0); // always succeeds for k <= n
}

const SimpleCycle* CycleStream::next() {
    if (done_) return nullptr;
    if (!started_) {
        started_ = true;
        for (k_ = k_lo_; k_ <= k_hi_; ++k_)
            if (start_k()) return &cur_;
        done_ = true;
        return nullptr;
    }
    if (advance_ys()) return &cur_;
    if (advance_xs()) {
        used_y_ = 0;
        if (fill_ys_from(0)) return &cur_;
    }
    while (++k_ <= k_hi_)
        if (start_k()) return &cur_;
    done_ = true;
    return nullptr;
}

namespace {

// Colex unrank of a t-subset of {0..n-1}: positions v_0 < ... < v_{t-1}
// with rank = sum C(v_i, i+1).
std::vector<int> combination_unrank(int n, int t, BigInt r) {
    std::vector<int> out(static_cast<size_t>(t));
    int hi = n - 1;
    for (int i = t - 1; i >= 0; --i) {
        int v = hi;
        while (binomial(static_cast<unsigned>(v), static_cast<unsigned>(i + 1)) > r) --v;
        out[static_cast<size_t>(i)] = v;
        r -= binomial(static_cast<unsigned>(v), static_cast<unsigned>(i + 1));
        hi = v - 1;
    }
    return out;
}

} // namespace

SimpleCycle sample_simple_cycle(int n, Rng& rng) {
    if (n < 2) throw std::invalid_argument("sample_simple_cycle: n < 2");
    // Work in the doubled space where each cycle appears once per ys
    // direction; folding the direction at the end keeps uniformity.
    BigInt total2 = 2 * count_simple_cycles(n);
    BigInt r = rng.below_big(total2);
    int k = 2;
    for (;; ++k) {
        BigInt stratum = 2 * count_simple_cycles_k(n, k);
        if (r < stratum) break;
        r -= stratum;
    }
    BigInt per_xs = falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k));
    BigInt xs_idx = r / per_xs;
    BigInt ys_idx = r % per_xs;

    BigInt fk1 = factorial(static_cast<unsigned>(k - 1));
    BigInt set_idx = xs_idx / fk1;
    BigInt perm_idx = xs_idx % fk1;

    std::vector<int> xset = combination_unrank(n, k, set_idx);
    SimpleCycle c;
    c.xs.resize(static_cast<size_t>(k));
    c.xs[0] = xset[0]; // the minimum anchors the traversal
    std::vector<int> rest(xset.begin() + 1, xset.end());
    for (int j = 1; j < k; ++j) {
        BigInt f = factorial(static_cast<unsigned>(k - 1 - j));
        auto idx = static_cast<size_t>(BigInt(perm_idx / f).convert_to<std::uint64_t>());
        perm_idx %= f;
        c.xs[static_cast<size_t>(j)] = rest[idx];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    }

    std::vector<int> avail(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) avail[static_cast<size_t>(i)] = i;
    c.ys.resize(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        BigInt f = falling_factorial(static_cast<unsigned>(n - 1 - j),
                                     static_cast<unsigned>(k - 1 - j));
        auto idx = static_cast<size_t>(BigInt(ys_idx / f).convert_to<std::uint64_t>());
        ys_idx %= f;
        c.ys[static_cast<size_t>(j)] = avail[idx];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    if (c.ys.front() > c.ys.back()) std::reverse(c.ys.begin(), c.ys.end());
    return c;
}

SimpleCycle sample_simple_cycle(int n, std::uint64_t seed) {
    Rng rng(seed);
    return sample_simple_cycle(n, rng);
}

} // namespace cyclefree
