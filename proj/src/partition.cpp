#include "cyclefree/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cyclefree {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = std::numeric_limits<int>::max();
    long long sum = 0;
    for (int p : parts_) {
        if (p < 1 || p > prev) throw std::invalid_argument("Partition: parts must be weakly decreasing and positive");
        prev = p;
        sum += p;
    }
    if (sum > std::numeric_limits<int>::max()) throw std::invalid_argument("Partition: too large");
    n_ = static_cast<int>(sum);
}

std::string Partition::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::hook(int n, int m) {
    if (n < 1 || m < 0 || m > n - 1) throw std::invalid_argument("Partition::hook: need 0 <= m <= n-1");
    std::vector<int> parts;
    parts.push_back(n - m);
    for (int i = 0; i < m; ++i) parts.push_back(1);
    return Partition(std::move(parts));
}

bool Partition::is_hook() const {
    if (parts_.empty()) return false;
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

int Partition::hook_m() const {
    if (!is_hook()) throw std::invalid_argument("Partition::hook_m: not a hook");
    return static_cast<int>(parts_.size()) - 1;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    if (parts_.empty()) return Partition();
    out.resize(static_cast<size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<size_t>(j)];
    return Partition(std::move(out));
}

bool Partition::dominates(const Partition& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Partition::dominates: different n");
    long long a = 0, b = 0;
    size_t len = std::max(parts_.size(), o.parts_.size());
    for (size_t i = 0; i < len; ++i) {
        a += i < parts_.size() ? parts_[i] : 0;
        b += i < o.parts_.size() ? o.parts_[i] : 0;
        if (a < b) return false;
    }
    return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n < 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

BigInt class_size(const Partition& mu) {
    // n! / z_mu with z_mu = prod_k k^{m_k} m_k!
    BigInt z = 1;
    int run_val = -1, run_len = 0;
    auto flush = [&]() {
        for (int i = 1; i <= run_len; ++i) z *= i; // m_k!
    };
    for (int p : mu.parts()) {
        z *= p;
        if (p == run_val) {
            ++run_len;
        } else {
            flush();
            run_val = p;
            run_len = 1;
        }
    }
    flush();
    return factorial(static_cast<unsigned>(mu.n())) / z;
}

Partition cycle_type(const Perm& p) { return Partition(cycle_lengths(p)); }

Partition partition_from_str(const std::string& s) {
    std::vector<int> parts;
    if (!s.empty()) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

} // namespace cyclefree
