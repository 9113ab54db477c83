#include "cyclefree/birkhoff.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace cyclefree {

IndependenceReport verify_independent(const PermSet& a, const IndepOptions& opt) {
    IndependenceReport r;
    size_t sz = a.members.size();
    if (!opt.exhaustive) {
        if (sz < 2) {
            r.pass = true;
            return r;
        }
        Rng rng(opt.seed);
        for (std::uint64_t t = 0; t < opt.samples; ++t) {
            size_t i = static_cast<size_t>(rng.below(sz));
            size_t j = static_cast<size_t>(rng.below(sz - 1));
            if (j >= i) ++j;
            ++r.pairs_checked;
            if (adjacent(a.members[i], a.members[j])) {
                r.pass = false;
                r.violation = {a.members[std::min(i, j)], a.members[std::max(i, j)]};
                r.tau_lengths = cycle_lengths(compose(a.members[i], inverse(a.members[j])));
                return r;
            }
        }
        r.pass = true;
        return r;
    }

    if (static_cast<std::uint64_t>(sz) * sz > opt.max_pairs)
        throw BudgetError("verify_independent: |A|^2 exceeds the pair budget");
    // Row-major scan of i < j gives the lexicographically first violating
    // pair over the sorted member list.
    for (size_t i = 0; i < sz; ++i) {
        Perm inv_i = inverse(a.members[i]);
        for (size_t j = i + 1; j < sz; ++j) {
            ++r.pairs_checked;
            Perm tau = compose(a.members[j], inv_i);
            if (is_single_cycle(tau)) {
                r.pass = false;
                r.violation = {a.members[i], a.members[j]};
                r.tau_lengths = cycle_lengths(tau);
                return r;
            }
        }
    }
    r.pass = true;
    return r;
}

namespace {

Label label_from_word(std::uint64_t w, int d) {
    Label l(d, 2);
    for (int i = 0; i < d; ++i)
        if ((w >> i) & 1) l.set_coord(i, 1);
    return l;
}

Label label_from_digit_vec(const std::vector<std::uint32_t>& v, int d, int q) {
    Label l(d, q);
    for (int i = 0; i < d; ++i) l.set_coord(i, static_cast<int>(v[static_cast<size_t>(i)]));
    return l;
}

} // namespace

std::pair<Label, PermSet> best_fiber(const Labeling& g, int max_n) {
    const int n = g.n();
    if (n > max_n) throw BudgetError("best_fiber: n exceeds the enumeration budget");
    const int d = g.d(), q = g.q();
    const bool fast = (q == 2 && d <= 64);

    Label win(d, q);
    if (fast) {
        std::vector<std::uint64_t> words(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) words[static_cast<size_t>(x) * n + y] = g.at(x, y).packed_word(0);
        std::unordered_map<std::uint64_t, std::uint64_t> counts;
        Perm p = identity_perm(n);
        do {
            std::uint64_t s = 0;
            for (int i = 0; i < n; ++i) s ^= words[static_cast<size_t>(i) * n + p[static_cast<size_t>(i)]];
            ++counts[s];
        } while (std::next_permutation(p.begin(), p.end()));
        std::uint64_t maxc = 0;
        for (const auto& [key, c] : counts) maxc = std::max(maxc, c);
        bool have = false;
        for (const auto& [key, c] : counts) {
            if (c != maxc) continue;
            Label cand = label_from_word(key, d);
            if (!have || cand.lex_less(win)) {
                win = cand;
                have = true;
            }
        }
        std::uint64_t winw = 0;
        for (int i = 0; i < d; ++i)
            if (win.coord(i)) winw |= std::uint64_t{1} << i;
        std::vector<Perm> members;
        p = identity_perm(n);
        do {
            std::uint64_t s = 0;
            for (int i = 0; i < n; ++i) s ^= words[static_cast<size_t>(i) * n + p[static_cast<size_t>(i)]];
            if (s == winw) members.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        return {win, make_permset(n, std::move(members))};
    }

    std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
    auto sum_digits = [&](const Perm& p) {
        Label s(d, q);
        for (int i = 0; i < n; ++i) s += g.at(i, p[static_cast<size_t>(i)]);
        std::vector<std::uint32_t> v(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) v[static_cast<size_t>(i)] = static_cast<std::uint32_t>(s.coord(i));
        return v;
    };
    Perm p = identity_perm(n);
    do {
        ++counts[sum_digits(p)];
    } while (std::next_permutation(p.begin(), p.end()));
    std::uint64_t maxc = 0;
    for (const auto& [key, c] : counts) maxc = std::max(maxc, c);
    // std::map iterates keys in coordinatewise lexicographic order, so the
    // first maximal fiber is the tie-break winner.
    std::vector<std::uint32_t> winkey;
    for (const auto& [key, c] : counts)
        if (c == maxc) {
            winkey = key;
            break;
        }
    win = label_from_digit_vec(winkey, d, q);
    std::vector<Perm> members;
    p = identity_perm(n);
    do {
        if (sum_digits(p) == winkey) members.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return {win, make_permset(n, std::move(members))};
}

std::uint64_t subset_rank(const std::vector<int>& R, const std::vector<int>& S) {
    size_t r = R.size(), s = S.size();
    if (r == 0 || r % 2 != 0 || s != r / 2) throw std::invalid_argument("subset_rank: need |S| = |R|/2");
    for (size_t i = 1; i < r; ++i)
        if (R[i] <= R[i - 1]) throw std::invalid_argument("subset_rank: R not sorted");
    std::uint64_t rank = 0;
    size_t pi = 0;
    for (size_t i = 0; i < s; ++i) {
        while (pi < r && R[pi] < S[i]) ++pi;
        if (pi >= r || R[pi] != S[i]) throw std::invalid_argument("subset_rank: S not a subset of R");
        rank += binomial_u64(static_cast<unsigned>(pi), static_cast<unsigned>(i + 1));
        ++pi;
    }
    return rank;
}

std::vector<int> subset_unrank(const std::vector<int>& R, std::uint64_t r) {
    size_t sz = R.size();
    if (sz == 0 || sz % 2 != 0) throw std::invalid_argument("subset_unrank: |R| must be even");
    size_t t = sz / 2;
    if (r >= binomial_u64(static_cast<unsigned>(sz), static_cast<unsigned>(t)))
        throw std::invalid_argument("subset_unrank: rank out of range");
    std::vector<int> pos(t);
    int hi = static_cast<int>(sz) - 1;
    for (size_t i = t; i-- > 0;) {
        int v = hi;
        while (binomial_u64(static_cast<unsigned>(v), static_cast<unsigned>(i + 1)) > r) --v;
        pos[i] = v;
        r -= binomial_u64(static_cast<unsigned>(v), static_cast<unsigned>(i + 1));
        hi = v - 1;
    }
    std::vector<int> out(t);
    for (size_t i = 0; i < t; ++i) out[i] = R[static_cast<size_t>(pos[i])];
    return out;
}

BlockSystem make_block_system(int n) {
    if (n < 2 || n > 64 || (n & (n - 1)) != 0)
        throw std::invalid_argument("make_block_system: n must be a power of two in [2, 64]");
    BlockSystem sys;
    sys.n = n;
    sys.m = std::countr_zero(static_cast<unsigned>(n));
    for (int i = 1; i <= sys.m; ++i) {
        unsigned parent = static_cast<unsigned>(n >> (i - 1));
        sys.moduli.push_back(binomial_u64(parent, parent / 2));
    }
    return sys;
}

namespace {

// Checksum at one level: ranks of left-child image halves within their
// parent images, summed mod M_i.
std::uint64_t level_checksum(const Perm& p, const BlockSystem& sys, int i) {
    int pbs = sys.n >> (i - 1); // parent block size
    int bs = pbs / 2;
    std::uint64_t M = sys.moduli[static_cast<size_t>(i - 1)];
    std::uint64_t sum = 0;
    int blocks = 1 << (i - 1);
    for (int j = 0; j < blocks; ++j) {
        std::vector<int> parent_im(static_cast<size_t>(pbs));
        for (int t = 0; t < pbs; ++t) parent_im[static_cast<size_t>(t)] = p[static_cast<size_t>(j * pbs + t)];
        std::sort(parent_im.begin(), parent_im.end());
        std::vector<int> child_im(static_cast<size_t>(bs));
        for (int t = 0; t < bs; ++t) child_im[static_cast<size_t>(t)] = p[static_cast<size_t>(j * pbs + t)];
        std::sort(child_im.begin(), child_im.end());
        sum = (sum + subset_rank(parent_im, child_im)) % M;
    }
    return sum;
}

} // namespace

int blockset_levels_passed(const Perm& p, const BlockSystem& sys) {
    if (static_cast<int>(p.size()) != sys.n) throw std::invalid_argument("blockset: size mismatch");
    for (int i = 1; i <= sys.m; ++i)
        if (level_checksum(p, sys, i) != 0) return i - 1;
    return sys.m;
}

bool blockset_member(const Perm& p, const BlockSystem& sys) {
    return blockset_levels_passed(p, sys) == sys.m;
}

BlocksetEnumeration blockset_enumerate(const BlockSystem& sys) {
    if (sys.n > 8) throw BudgetError("blockset_enumerate: n! enumeration limited to n <= 8");
    BlocksetEnumeration out;
    out.level_sizes.assign(static_cast<size_t>(sys.m), 0);
    std::vector<Perm> members;
    Perm p = identity_perm(sys.n);
    do {
        int passed = blockset_levels_passed(p, sys);
        for (int i = 1; i <= passed; ++i) ++out.level_sizes[static_cast<size_t>(i - 1)];
        if (passed == sys.m) members.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    out.set = make_permset(sys.n, std::move(members));
    return out;
}

BigInt blockset_size(const BlockSystem& sys) {
    BigInt f = factorial(static_cast<unsigned>(sys.n));
    BigInt prod = 1;
    for (std::uint64_t m : sys.moduli) prod *= m;
    if (f % prod != 0) throw std::logic_error("blockset_size: moduli do not divide n!");
    return f / prod;
}

Perm blockset_sample(const BlockSystem& sys, Rng& rng) {
    std::vector<std::vector<int>> images(1);
    images[0].resize(static_cast<size_t>(sys.n));
    for (int i = 0; i < sys.n; ++i) images[0][static_cast<size_t>(i)] = i;

    for (int i = 1; i <= sys.m; ++i) {
        std::uint64_t M = sys.moduli[static_cast<size_t>(i - 1)];
        int blocks = 1 << (i - 1);
        std::vector<std::vector<int>> next(static_cast<size_t>(blocks) * 2);
        std::uint64_t sum = 0;
        for (int j = 0; j < blocks; ++j) {
            const std::vector<int>& parent = images[static_cast<size_t>(j)];
            std::uint64_t rank;
            if (j + 1 < blocks)
                rank = rng.below(M);
            else
                rank = (M - sum % M) % M; // cancel the level checksum
            sum = (sum + rank) % M;
            std::vector<int> left = subset_unrank(parent, rank);
            std::vector<int> right;
            right.reserve(parent.size() - left.size());
            std::set_difference(parent.begin(), parent.end(), left.begin(), left.end(),
                                std::back_inserter(right));
            next[static_cast<size_t>(2 * j)] = std::move(left);
            next[static_cast<size_t>(2 * j) + 1] = std::move(right);
        }
        images = std::move(next);
    }

    Perm p(static_cast<size_t>(sys.n));
    for (int j = 0; j < sys.n; ++j) p[static_cast<size_t>(j)] = images[static_cast<size_t>(j)][0];
    return p;
}

Perm blockset_sample(const BlockSystem& sys, std::uint64_t seed) {
    Rng rng(seed);
    return blockset_sample(sys, rng);
}

bool block_claim_holds(const Perm& tau, const BlockSystem& sys, int level) {
    if (level < 0 || level > sys.m) throw std::invalid_argument("block_claim_holds: level");
    int bs = sys.n >> level;
    int blocks = 1 << level;
    int moved = 0;
    for (int j = 0; j < blocks; ++j) {
        bool pointwise = true;
        for (int t = 0; t < bs; ++t)
            if (tau[static_cast<size_t>(j * bs + t)] != j * bs + t) {
                pointwise = false;
                break;
            }
        if (pointwise) continue;
        ++moved;
        std::vector<int> im(static_cast<size_t>(bs));
        for (int t = 0; t < bs; ++t) im[static_cast<size_t>(t)] = tau[static_cast<size_t>(j * bs + t)];
        std::sort(im.begin(), im.end());
        for (int t = 0; t < bs; ++t)
            if (im[static_cast<size_t>(t)] != j * bs + t) return false; // leaves its block
    }
    return moved == 1;
}

bool bound_check(const BigInt& size, int n) {
    if (n < 1) throw std::invalid_argument("bound_check: n < 1");
    // size <= n!/2^((n-4)/2) <=> size^2 * 2^(n-4) <= (n!)^2, shifted to
    // whichever side keeps the exponent nonnegative.
    BigInt lhs = size * size;
    BigInt f = factorial(static_cast<unsigned>(n));
    BigInt rhs = f * f;
    if (n >= 4)
        lhs <<= (n - 4);
    else
        rhs <<= (4 - n);
    return lhs <= rhs;
}

namespace {

struct MisContext {
    std::vector<std::uint32_t> adj;
    int best_size = -1;
    std::uint32_t best_mask = 0;
};

void mis_dfs(MisContext& ctx, std::uint32_t cand, std::uint32_t cur, int size) {
    if (size + std::popcount(cand) <= ctx.best_size) return;
    if (cand == 0) {
        if (size > ctx.best_size) {
            ctx.best_size = size;
            ctx.best_mask = cur;
        }
        return;
    }
    int v = std::countr_zero(cand);
    std::uint32_t bit = std::uint32_t{1} << v;
    // Include-first exploration plus strict improvement makes the first
    // maximum found the lexicographically smallest witness.
    mis_dfs(ctx, cand & ~ctx.adj[static_cast<size_t>(v)] & ~bit, cur | bit, size + 1);
    mis_dfs(ctx, cand & ~bit, cur, size);
}

} // namespace

std::pair<int, std::vector<Perm>> max_independent_exact(int n) {
    if (n < 1) throw std::invalid_argument("max_independent_exact: n < 1");
    if (n > 4) throw BudgetError("max_independent_exact: exact search limited to n <= 4");
    std::vector<Perm> verts;
    Perm p = identity_perm(n);
    do {
        verts.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    size_t nv = verts.size();
    MisContext ctx;
    ctx.adj.assign(nv, 0);
    for (size_t i = 0; i < nv; ++i)
        for (size_t j = i + 1; j < nv; ++j)
            if (adjacent(verts[i], verts[j])) {
                ctx.adj[i] |= std::uint32_t{1} << j;
                ctx.adj[j] |= std::uint32_t{1} << i;
            }
    std::uint32_t all = (nv >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << nv) - 1);
    mis_dfs(ctx, all, 0, 0);
    std::vector<Perm> witness;
    for (size_t v = 0; v < nv; ++v)
        if ((ctx.best_mask >> v) & 1) witness.push_back(verts[v]);
    return {ctx.best_size, witness};
}

} // namespace cyclefree
