#include "cyclefree/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cyclefree {

Label::Label(int d, int q) : d_(d), q_(q) {
    if (d < 0 || q < 2) throw std::invalid_argument("Label: bad d or q");
    if (q == 2)
        bits_.assign(static_cast<size_t>((d + 63) / 64), 0);
    else
        dig_.assign(static_cast<size_t>(d), 0);
}

int Label::coord(int i) const {
    if (i < 0 || i >= d_) throw std::out_of_range("Label::coord");
    if (q_ == 2) return static_cast<int>((bits_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1);
    return static_cast<int>(dig_[static_cast<size_t>(i)]);
}

void Label::set_coord(int i, int v) {
    if (i < 0 || i >= d_) throw std::out_of_range("Label::set_coord");
    if (v < 0 || v >= q_) throw std::invalid_argument("Label::set_coord: value");
    if (q_ == 2) {
        std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v)
            bits_[static_cast<size_t>(i) >> 6] |= bit;
        else
            bits_[static_cast<size_t>(i) >> 6] &= ~bit;
    } else {
        dig_[static_cast<size_t>(i)] = static_cast<std::uint32_t>(v);
    }
}

Label& Label::operator+=(const Label& o) {
    if (d_ != o.d_ || q_ != o.q_) throw std::invalid_argument("Label: mixed shapes");
    if (q_ == 2) {
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= o.bits_[w];
    } else {
        for (size_t i = 0; i < dig_.size(); ++i)
            dig_[i] = (dig_[i] + o.dig_[i]) % static_cast<std::uint32_t>(q_);
    }
    return *this;
}

Label& Label::operator-=(const Label& o) {
    if (d_ != o.d_ || q_ != o.q_) throw std::invalid_argument("Label: mixed shapes");
    if (q_ == 2) {
        for (size_t w = 0; w < bits_.size(); ++w) bits_[w] ^= o.bits_[w];
    } else {
        auto q = static_cast<std::uint32_t>(q_);
        for (size_t i = 0; i < dig_.size(); ++i) dig_[i] = (dig_[i] + q - o.dig_[i]) % q;
    }
    return *this;
}

bool Label::is_zero() const {
    if (q_ == 2) return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
    return std::all_of(dig_.begin(), dig_.end(), [](std::uint32_t v) { return v == 0; });
}

bool Label::operator==(const Label& o) const {
    return d_ == o.d_ && q_ == o.q_ && bits_ == o.bits_ && dig_ == o.dig_;
}

bool Label::lex_less(const Label& o) const {
    if (d_ != o.d_ || q_ != o.q_) throw std::invalid_argument("Label: mixed shapes");
    for (int i = 0; i < d_; ++i) {
        int a = coord(i), b = o.coord(i);
        if (a != b) return a < b;
    }
    return false;
}

std::string Label::digits() const {
    if (q_ > 10) throw FormatError("Label: digit form needs q <= 10");
    std::string s(static_cast<size_t>(d_), '0');
    for (int i = 0; i < d_; ++i) s[static_cast<size_t>(i)] = static_cast<char>('0' + coord(i));
    return s;
}

Label Label::from_digits(const std::string& s, int q) {
    if (q < 2 || q > 10) throw FormatError("Label: digit form needs 2 <= q <= 10");
    Label l(static_cast<int>(s.size()), q);
    for (size_t i = 0; i < s.size(); ++i) {
        int v = s[i] - '0';
        if (v < 0 || v >= q) throw FormatError("Label: bad digit");
        l.set_coord(static_cast<int>(i), v);
    }
    return l;
}

Labeling::Labeling(int n, int d, int q) : n_(n), d_(d), q_(q) {
    if (n < 1) throw std::invalid_argument("Labeling: n < 1");
    lab_.assign(static_cast<size_t>(n) * n, Label(d, q));
}

bool Labeling::operator==(const Labeling& o) const {
    return n_ == o.n_ && d_ == o.d_ && q_ == o.q_ && lab_ == o.lab_;
}

Labeling construct_recursive(int n) {
    if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("construct_recursive: n must be a power of two >= 2");
    if (n == 2) {
        Labeling g(2, 6, 2);
        g.at(0, 0).set_coord(0, 1);
        g.at(0, 1).set_coord(1, 1);
        g.at(1, 0).set_coord(2, 1);
        g.at(1, 1).set_coord(3, 1);
        return g;
    }
    Labeling half = construct_recursive(n / 2);
    int h = n / 2;
    Labeling g(n, 3 * n, 2);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            Label& l = g.at(x, y);
            if (y < h) l.set_coord(x, 1);
            if (x < h) l.set_coord(n + (y % h), 1);
            const Label& sub = half.at(x % h, y % h);
            for (int j = 0; j < 3 * h; ++j)
                if (sub.coord(j)) l.set_coord(n + h + j, 1);
        }
    }
    return g;
}

Labeling construct_random(int n, int d, int q, std::uint64_t seed) {
    if (n < 1 || d < 0 || q < 2) throw std::invalid_argument("construct_random: bad parameters");
    Labeling g(n, d, q);
    Rng rng(seed);
    // Draw order fixed: (x, y) lexicographic, coordinates ascending.
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            Label& l = g.at(x, y);
            if (q == 2) {
                for (int i = 0; i < d; i += 64) {
                    std::uint64_t w = rng.next();
                    int take = std::min(64, d - i);
                    for (int b = 0; b < take; ++b)
                        if ((w >> b) & 1) l.set_coord(i + b, 1);
                }
            } else {
                for (int i = 0; i < d; ++i)
                    l.set_coord(i, static_cast<int>(rng.below(static_cast<std::uint64_t>(q))));
            }
        }
    }
    return g;
}

Label traversal_sum(const Labeling& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    if (!is_valid_traversal(g.n(), xs, ys))
        throw std::invalid_argument("traversal_sum: not a simple cycle traversal");
    size_t k = xs.size();
    Label s(g.d(), g.q());
    for (size_t i = 0; i < k; ++i) {
        s += g.at(xs[i], ys[i]);
        s -= g.at(xs[(i + 1) % k], ys[i]);
    }
    return s;
}

Label cycle_sum(const Labeling& g, const SimpleCycle& c) { return traversal_sum(g, c.xs, c.ys); }

std::string report_line(const CycleFreeReport& r) {
    std::ostringstream os;
    os << "verdict=" << (r.pass ? "pass" : "fail") << " cycles=" << r.cycles_checked;
    if (r.certificate) {
        os << " certificate=";
        const SimpleCycle& c = *r.certificate;
        for (int i = 0; i < c.k(); ++i) {
            if (i) os << ' ';
            os << c.xs[static_cast<size_t>(i)] + 1 << ' ' << c.ys[static_cast<size_t>(i)] + 1;
        }
    }
    return os.str();
}

namespace {

struct Stratum {
    int k;
    std::vector<int> prefix;
};

// One chunk per (k, xs[0], xs[1]) in canonical order, so per-stratum scans
// concatenate to the global enumeration order.
std::vector<Stratum> make_strata(int n) {
    std::vector<Stratum> out;
    for (int k = 2; k <= n; ++k)
        for (int x0 = 0; x0 + k <= n; ++x0)
            for (int x1 = x0 + 1; x1 < n; ++x1) out.push_back({k, {x0, x1}});
    return out;
}

struct StratumResult {
    std::uint64_t count = 0; // cycles seen before stopping
    bool violated = false;
    SimpleCycle first_violation;
};

// q = 2, d <= 64: labels flattened to words, the sum is a pure XOR chain.
void scan_stratum_fast(const std::vector<std::uint64_t>& w, int n, const Stratum& st,
                       StratumResult& res) {
    CycleStream cs(n, st.k, st.prefix);
    const SimpleCycle* c;
    while ((c = cs.next()) != nullptr) {
        const int k = st.k;
        std::uint64_t sum = 0;
        const int* xs = c->xs.data();
        const int* ys = c->ys.data();
        for (int i = 0; i + 1 < k; ++i)
            sum ^= w[static_cast<size_t>(xs[i]) * n + ys[i]] ^
                   w[static_cast<size_t>(xs[i + 1]) * n + ys[i]];
        sum ^= w[static_cast<size_t>(xs[k - 1]) * n + ys[k - 1]] ^
               w[static_cast<size_t>(xs[0]) * n + ys[k - 1]];
        if (sum == 0) {
            res.violated = true;
            res.first_violation = *c;
            return;
        }
        ++res.count;
    }
}

void scan_stratum_generic(const Labeling& g, const Stratum& st, StratumResult& res) {
    CycleStream cs(g.n(), st.k, st.prefix);
    const SimpleCycle* c;
    while ((c = cs.next()) != nullptr) {
        if (cycle_sum(g, *c).is_zero()) {
            res.violated = true;
            res.first_violation = *c;
            return;
        }
        ++res.count;
    }
}

} // namespace

CycleFreeReport verify_cycle_free(const Labeling& g, const VerifyOptions& opt) {
    const int n = g.n();
    if (n < 2) {
        // K_{1,1} has no simple cycle.
        return {true, 0, std::nullopt};
    }

    if (!opt.exhaustive) {
        Rng rng(opt.seed);
        CycleFreeReport r;
        for (std::uint64_t i = 0; i < opt.samples; ++i) {
            SimpleCycle c = sample_simple_cycle(n, rng);
            if (cycle_sum(g, c).is_zero()) {
                r.pass = false;
                r.cycles_checked = i + 1;
                r.certificate = c;
                return r;
            }
        }
        r.pass = true;
        r.cycles_checked = opt.samples;
        return r;
    }

    BigInt total = count_simple_cycles(n);
    if (total > opt.max_cycles)
        throw BudgetError("verify_cycle_free: " + total.str() + " cycles exceed the exhaustive budget of " +
                          std::to_string(opt.max_cycles) + "; raise max_cycles or use sampling");

    const bool fast = (g.q() == 2 && g.d() <= 64);
    std::vector<std::uint64_t> words;
    if (fast) {
        words.resize(static_cast<size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) words[static_cast<size_t>(x) * n + y] = g.at(x, y).packed_word(0);
    }

    std::vector<Stratum> strata = make_strata(n);
    std::vector<StratumResult> results(strata.size());
    std::vector<char> scanned(strata.size(), 0);

    unsigned hw = std::thread::hardware_concurrency();
    unsigned nthreads = opt.threads > 0 ? static_cast<unsigned>(opt.threads) : (hw ? hw : 1);
    nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(strata.size()));

    std::atomic<size_t> next{0};
    std::atomic<size_t> earliest{strata.size()};

    auto worker = [&]() {
        for (;;) {
            size_t s = next.fetch_add(1);
            if (s >= strata.size()) return;
            // Strata after a known violation cannot contain the first
            // violation; earlier ones must still be scanned in full.
            if (s > earliest.load()) continue;
            if (fast)
                scan_stratum_fast(words, n, strata[s], results[s]);
            else
                scan_stratum_generic(g, strata[s], results[s]);
            scanned[s] = 1;
            if (results[s].violated) {
                size_t cur = earliest.load();
                while (s < cur && !earliest.compare_exchange_weak(cur, s)) {}
            }
        }
    };

    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CycleFreeReport r;
    size_t viol = strata.size();
    for (size_t s = 0; s < strata.size(); ++s)
        if (scanned[s] && results[s].violated) {
            viol = s;
            break;
        }
    if (viol == strata.size()) {
        r.pass = true;
        std::uint64_t checked = 0;
        for (const auto& res : results) checked += res.count;
        r.cycles_checked = checked;
        return r;
    }
    r.pass = false;
    std::uint64_t before = 0;
    for (size_t s = 0; s < viol; ++s) before += results[s].count;
    r.cycles_checked = before + results[viol].count + 1;
    r.certificate = results[viol].first_violation;
    return r;
}

namespace {

// Cycles of K_{n,n} as edge-id lists, grouped by the last edge assigned
// in lexicographic edge order, so the DFS can test each cycle as soon as
// it is complete.
std::vector<std::vector<std::vector<int>>> cycles_by_completion(int n) {
    std::vector<std::vector<std::vector<int>>> by_edge(static_cast<size_t>(n) * n);
    CycleStream cs(n);
    const SimpleCycle* c;
    while ((c = cs.next()) != nullptr) {
        std::vector<int> edges;
        int k = c->k();
        for (int i = 0; i < k; ++i) {
            edges.push_back(c->xs[static_cast<size_t>(i)] * n + c->ys[static_cast<size_t>(i)]);
            edges.push_back(c->xs[static_cast<size_t>((i + 1) % k)] * n + c->ys[static_cast<size_t>(i)]);
        }
        int last = *std::max_element(edges.begin(), edges.end());
        by_edge[static_cast<size_t>(last)].push_back(std::move(edges));
    }
    return by_edge;
}

bool min_d_dfs(int e, int num_edges, std::uint32_t vmax,
               const std::vector<std::vector<std::vector<int>>>& by_edge,
               std::vector<std::uint32_t>& vals) {
    if (e == num_edges) return true;
    for (std::uint32_t v = 0; v <= vmax; ++v) {
        vals[static_cast<size_t>(e)] = v;
        bool ok = true;
        for (const auto& cyc : by_edge[static_cast<size_t>(e)]) {
            std::uint32_t s = 0;
            for (int id : cyc) s ^= vals[static_cast<size_t>(id)];
            if (s == 0) {
                ok = false;
                break;
            }
        }
        if (ok && min_d_dfs(e + 1, num_edges, vmax, by_edge, vals)) return true;
    }
    return false;
}

} // namespace

int search_min_d(int n) {
    if (n < 2) throw std::invalid_argument("search_min_d: n < 2");
    if (n > 3) throw BudgetError("search_min_d: search space 2^(n^2 d) is out of reach for n > 3");
    auto by_edge = cycles_by_completion(n);
    int num_edges = n * n;
    for (int d = 0; d <= 12; ++d) {
        std::vector<std::uint32_t> vals(static_cast<size_t>(num_edges), 0);
        std::uint32_t vmax = (d >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << d) - 1);
        if (min_d_dfs(0, num_edges, vmax, by_edge, vals)) return d;
    }
    throw std::runtime_error("search_min_d: no labeling found up to d = 12");
}

std::string encode_labeling(const Labeling& g) {
    if (g.d() < 1) throw FormatError("labeling: d >= 1 required for the text form");
    std::ostringstream os;
    os << "CYCLEFREE v1\n";
    os << "n=" << g.n() << " d=" << g.d() << " q=" << g.q() << "\n";
    for (int x = 0; x < g.n(); ++x)
        for (int y = 0; y < g.n(); ++y)
            os << x + 1 << ' ' << y + 1 << ' ' << g.at(x, y).digits() << "\n";
    return os.str();
}

Labeling decode_labeling(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "CYCLEFREE v1")
        throw FormatError("labeling: missing CYCLEFREE v1 header");
    if (!std::getline(in, line)) throw FormatError("labeling: missing parameter line");
    int n = 0, d = 0, q = 0;
    {
        std::istringstream is(line);
        std::string tn, td, tq;
        if (!(is >> tn >> td >> tq)) throw FormatError("labeling: bad parameter line");
        std::string rest;
        if (is >> rest) throw FormatError("labeling: bad parameter line");
        if (tn.rfind("n=", 0) != 0 || td.rfind("d=", 0) != 0 || tq.rfind("q=", 0) != 0)
            throw FormatError("labeling: bad parameter line");
        try {
            n = std::stoi(tn.substr(2));
            d = std::stoi(td.substr(2));
            q = std::stoi(tq.substr(2));
        } catch (const std::exception&) {
            throw FormatError("labeling: bad parameter line");
        }
    }
    if (n < 1 || d < 1 || q < 2 || q > 10) throw FormatError("labeling: bad parameters");
    Labeling g(n, d, q);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (!std::getline(in, line)) throw FormatError("labeling: truncated edge list");
            std::istringstream is(line);
            int fx = 0, fy = 0;
            std::string digits;
            if (!(is >> fx >> fy >> digits)) throw FormatError("labeling: bad edge line");
            std::string rest;
            if (is >> rest) throw FormatError("labeling: bad edge line");
            if (fx != x + 1 || fy != y + 1)
                throw FormatError("labeling: edges must be in lexicographic order");
            if (static_cast<int>(digits.size()) != d) throw FormatError("labeling: wrong digit count");
            g.at(x, y) = Label::from_digits(digits, q);
        }
    }
    while (std::getline(in, line))
        if (!line.empty()) throw FormatError("labeling: trailing content");
    return g;
}

Labeling decode_labeling(const std::string& text) {
    std::istringstream is(text);
    return decode_labeling(is);
}

} // namespace cyclefree
