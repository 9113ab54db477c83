#ifndef CYCLEFREE_LABELING_HPP
#define CYCLEFREE_LABELING_HPP

#include "cyclefree/cycles.hpp"
#include "cyclefree/numeric.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cyclefree {

// Element of (Z_q)^d. Coordinate 0 here is "coordinate 1" of the text
// format and sits in the least significant bit of word 0. q = 2 is stored
// bit-packed; other moduli keep one digit per coordinate.
class Label {
public:
    Label() = default;
    Label(int d, int q); // zero label

    int d() const { return d_; }
    int q() const { return q_; }

    int coord(int i) const;
    void set_coord(int i, int v);

    Label& operator+=(const Label& o);
    Label& operator-=(const Label& o);

    bool is_zero() const;
    bool operator==(const Label& o) const;

    // Coordinatewise comparison, coordinate 0 first. Used for the
    // deterministic fiber tie-break.
    bool lex_less(const Label& o) const;

    // Digit string, coordinate 0 first; requires q <= 10.
    std::string digits() const;
    static Label from_digits(const std::string& s, int q);

    // q == 2 only: packed bits, word 0 holds coordinates 0..63.
    std::uint64_t packed_word(int w) const { return bits_[static_cast<size_t>(w)]; }

private:
    int d_ = 0, q_ = 0;
    std::vector<std::uint64_t> bits_; // q == 2
    std::vector<std::uint32_t> dig_;  // q > 2
};

// Edge labeling of K_{n,n}: one label per edge (x, y), 0-based.
class Labeling {
public:
    Labeling() = default;
    Labeling(int n, int d, int q); // all-zero labels

    int n() const { return n_; }
    int d() const { return d_; }
    int q() const { return q_; }

    const Label& at(int x, int y) const { return lab_[static_cast<size_t>(x) * n_ + y]; }
    Label& at(int x, int y) { return lab_[static_cast<size_t>(x) * n_ + y]; }

    bool operator==(const Labeling& o) const;

private:
    int n_ = 0, d_ = 0, q_ = 0;
    std::vector<Label> lab_;
};

// The recursive construction over F_2 with d = 3n; n must be a power of
// two >= 2. Blocks of each label, in coordinate order:
//   [0, n)        e_x if y < n/2, else 0
//   [n, 3n/2)     e_{y mod n/2} if x < n/2, else 0
//   [3n/2, 3n)    the level-(n/2) label of (x mod n/2, y mod n/2)
// Base case n = 2: the four edges get the first four unit vectors of F_2^6
// in lexicographic edge order.
Labeling construct_recursive(int n);

// Independent uniform labels; q >= 2, d >= 0.
Labeling construct_random(int n, int d, int q, std::uint64_t seed);

// Alternating edge sum along the traversal: +gamma(x_i, y_i) and
// -gamma(x_{i+1}, y_i), indices cyclic. Signs are immaterial for q = 2.
Label cycle_sum(const Labeling& g, const SimpleCycle& c);

// Same sum for a traversal that need not be canonical (still must be a
// valid simple cycle). <x, y> rotations keep the value, reversal negates.
Label traversal_sum(const Labeling& g, const std::vector<int>& xs, const std::vector<int>& ys);

struct CycleFreeReport {
    bool pass = false;
    std::uint64_t cycles_checked = 0;
    std::optional<SimpleCycle> certificate; // first violation in canonical order
};

// Single line "verdict=<pass|fail> cycles=<count> [certificate=<cycle>]",
// certificate printed as x1 y1 x2 y2 ... 1-based, no trailing newline.
std::string report_line(const CycleFreeReport& r);

struct VerifyOptions {
    bool exhaustive = true;
    std::uint64_t samples = 0; // sampled mode
    std::uint64_t seed = 0;
    // Exhaustive mode refuses (BudgetError) when the closed-form cycle
    // count exceeds this. Default admits n = 8 (256,485,040 cycles).
    std::uint64_t max_cycles = 300000000;
    int threads = 0; // 0 = hardware_concurrency
};

CycleFreeReport verify_cycle_free(const Labeling& g, const VerifyOptions& opt);

// Smallest d such that some labeling [n]x[n] -> F_2^d has no zero-sum
// simple cycle, by exhaustive search over labelings with early pruning,
// d = 0, 1, 2, ... n is capped at 3 (the search space is 2^(n^2 d)).
int search_min_d(int n);

// Text format, bit-exact:
//   CYCLEFREE v1
//   n=<n> d=<d> q=<q>
//   <x> <y> <digits>     (n^2 lines, lexicographic (x,y), 1-based)
std::string encode_labeling(const Labeling& g);
Labeling decode_labeling(std::istream& in);
Labeling decode_labeling(const std::string& text);

} // namespace cyclefree

#endif
