#ifndef CYCLEFREE_PARTITION_HPP
#define CYCLEFREE_PARTITION_HPP

#include "cyclefree/numeric.hpp"
#include "cyclefree/perm.hpp"

#include <string>
#include <vector>

namespace cyclefree {

// Integer partition: weakly decreasing positive parts. The empty
// partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates

    int n() const { return n_; }
    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const; // "3,1,1"

    // (n-m, 1^m), 0 <= m <= n-1
    static Partition hook(int n, int m);
    bool is_hook() const;
    int hook_m() const; // leg length; partition must be a hook

    Partition conjugate() const;

    // Dominance order: partial sums of *this >= those of o (same n).
    bool dominates(const Partition& o) const;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n in reverse lexicographic order: (n) first, (1^n)
// last. This order is the row/column order used everywhere.
std::vector<Partition> partitions(int n);

// Size of the conjugacy class with cycle type mu: n! / z_mu where
// z_mu = prod_k k^{m_k} m_k!.
BigInt class_size(const Partition& mu);

Partition cycle_type(const Perm& p);

Partition partition_from_str(const std::string& s); // "3,1,1"

} // namespace cyclefree

#endif
