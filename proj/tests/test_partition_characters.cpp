#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclefree/characters.hpp"
#include "cyclefree/numeric.hpp"
#include "cyclefree/partition.hpp"
#include "cyclefree/perm.hpp"

#include <map>
#include <string>
#include <thread>
#include <vector>

using namespace cyclefree;

namespace {

// Independent dimension oracle: the hook length formula
//   dim(lambda) = n! / prod of hook lengths.
BigInt dim_by_hooks(const Partition& lam) {
    const auto& p = lam.parts();
    Partition conj = lam.conjugate();
    const auto& c = conj.parts();
    BigInt denom = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = c[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
            denom *= arm + leg + 1;
        }
    BigInt d = factorial(static_cast<unsigned>(lam.n()));
    return d / denom;
}

} // namespace

TEST_CASE("partition construction, text, and basic shape queries") {
    Partition p({3, 1, 1});
    CHECK(p.n() == 5);
    CHECK(p.length() == 3);
    CHECK(p.str() == "3,1,1");
    CHECK(partition_from_str("3,1,1") == p);
    CHECK_THROWS_AS(Partition({1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
    CHECK(Partition().n() == 0);

    CHECK(Partition::hook(4, 0) == Partition({4}));
    CHECK(Partition::hook(4, 3) == Partition({1, 1, 1, 1}));
    CHECK(Partition::hook(5, 2) == Partition({3, 1, 1}));
    CHECK(Partition({3, 1, 1}).is_hook());
    CHECK(Partition({4}).is_hook());
    CHECK(Partition({1, 1, 1}).is_hook());
    CHECK(!Partition({2, 2}).is_hook());
    CHECK(!Partition({3, 2, 1}).is_hook());
    CHECK(Partition({3, 1, 1}).hook_m() == 2);
    CHECK(Partition({4}).hook_m() == 0);

    CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    for (int m = 0; m < 6; ++m)
        CHECK(Partition::hook(6, m).conjugate() == Partition::hook(6, 5 - m));

    CHECK(Partition({4}).dominates(Partition({2, 2})));
    CHECK(Partition({3, 1}).dominates(Partition({2, 2})));
    CHECK(!Partition({2, 2}).dominates(Partition({3, 1})));
    CHECK(Partition({2, 2}).dominates(Partition({2, 1, 1})));
    CHECK(Partition({2, 2}).dominates(Partition({2, 2})));
}

TEST_CASE("partition lists in reverse lexicographic order") {
    std::vector<Partition> p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(6).size() == 11);
    CHECK(partitions(10).size() == 42);
}

TEST_CASE("conjugacy class sizes") {
    CHECK(class_size(Partition({4})) == 6);
    CHECK(class_size(Partition({3, 1})) == 8);
    CHECK(class_size(Partition({2, 2})) == 3);
    CHECK(class_size(Partition({2, 1, 1})) == 6);
    CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const Partition& mu : partitions(n)) total += class_size(mu);
        CHECK(total == factorial(static_cast<unsigned>(n)));
    }
}

TEST_CASE("cycle types of permutations") {
    CHECK(cycle_type(identity_perm(4)) == Partition({1, 1, 1, 1}));
    CHECK(cycle_type(Perm{1, 2, 0, 3}) == Partition({3, 1}));
    CHECK(cycle_type(Perm{1, 0, 3, 2}) == Partition({2, 2}));
    CHECK(cycle_type(Perm{1, 2, 3, 0}) == Partition({4}));
}

TEST_CASE("the full S_4 character table") {
    // Rows chi^lambda, columns mu in the order (1^4), (2,1,1), (2,2),
    // (3,1), (4). Standard reference values.
    std::vector<Partition> cols = {Partition({1, 1, 1, 1}), Partition({2, 1, 1}),
                                   Partition({2, 2}), Partition({3, 1}), Partition({4})};
    std::map<std::string, std::vector<long long>> want = {
        {"4", {1, 1, 1, 1, 1}},
        {"3,1", {3, 1, -1, 0, -1}},
        {"2,2", {2, 0, 2, -1, 0}},
        {"2,1,1", {3, -1, -1, 0, 1}},
        {"1,1,1,1", {1, -1, 1, 1, -1}},
    };
    for (auto& [lam_s, row] : want) {
        Partition lam = partition_from_str(lam_s);
        for (size_t j = 0; j < cols.size(); ++j) CHECK(mn_character(lam, cols[j]) == row[j]);
    }
}

TEST_CASE("degrees match the hook length formula") {
    for (int n = 1; n <= 7; ++n) {
        Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& lam : partitions(n))
            CHECK(BigInt(mn_character(lam, ones)) == dim_by_hooks(lam));
    }
}

TEST_CASE("row orthogonality of the character tables up to n = 7") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<Partition> ps = partitions(n);
        BigInt nf = factorial(static_cast<unsigned>(n));
        for (size_t a = 0; a < ps.size(); ++a)
            for (size_t b = a; b < ps.size(); ++b) {
                BigInt ip = 0;
                for (const Partition& mu : ps)
                    ip += class_size(mu) * BigInt(mn_character(ps[a], mu)) *
                          BigInt(mn_character(ps[b], mu));
                CHECK(ip == (a == b ? nf : BigInt(0)));
            }
    }
}

TEST_CASE("characters on the long cycle: hooks alternate, the rest vanish") {
    for (int n = 2; n <= 9; ++n) {
        Partition ncyc({n});
        for (const Partition& lam : partitions(n)) {
            long long v = mn_character(lam, ncyc);
            if (lam.is_hook())
                CHECK(v == (lam.hook_m() % 2 == 0 ? 1 : -1));
            else
                CHECK(v == 0);
        }
    }
}

TEST_CASE("sign character and conjugate symmetry") {
    for (int n = 2; n <= 6; ++n) {
        Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& mu : partitions(n)) {
            int sgn = (n - mu.length()) % 2 == 0 ? 1 : -1;
            CHECK(mn_character(ones, mu) == sgn);
            // chi^{lambda'}(mu) = sign(mu) chi^lambda(mu)
            for (const Partition& lam : partitions(n))
                CHECK(mn_character(lam.conjugate(), mu) == sgn * mn_character(lam, mu));
        }
    }
}

TEST_CASE("the character cache tolerates concurrent fills") {
    // Compute the S_7 table from four threads at once, then compare
    // against a fresh sequential pass.
    std::vector<Partition> ps = partitions(7);
    std::vector<std::thread> pool;
    std::vector<std::vector<long long>> got(4);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (const Partition& lam : ps)
                for (const Partition& mu : ps) got[static_cast<size_t>(t)].push_back(mn_character(lam, mu));
        });
    for (auto& th : pool) th.join();
    for (int t = 1; t < 4; ++t) CHECK(got[static_cast<size_t>(t)] == got[0]);
    size_t idx = 0;
    for (const Partition& lam : ps)
        for (const Partition& mu : ps) CHECK(got[0][idx++] == mn_character(lam, mu));
}

TEST_CASE("Kostka numbers: frozen small values and general laws") {
    CHECK(kostka(Partition({3, 1}), Partition({2, 1, 1})) == 2);
    CHECK(kostka(Partition({2, 2}), Partition({2, 1, 1})) == 1);
    CHECK(kostka(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
    CHECK(kostka(Partition({2, 1, 1}), Partition({1, 1, 1, 1})) == 3);
    CHECK(kostka(Partition(), Partition()) == 1);

    for (int n = 1; n <= 6; ++n) {
        Partition ones(std::vector<int>(static_cast<size_t>(n), 1));
        for (const Partition& lam : partitions(n)) {
            // K_{lambda,lambda} = 1, K_{(n),mu} = 1, dominance support,
            // K_{lambda,(1^n)} = dim lambda
            CHECK(kostka(lam, lam) == 1);
            CHECK(kostka(Partition({n}), lam) == 1);
            CHECK(kostka(lam, ones) == dim_by_hooks(lam));
            for (const Partition& mu : partitions(n)) {
                BigInt k = kostka(lam, mu);
                // positive exactly on the dominance cone
                if (lam.dominates(mu))
                    CHECK(k > 0);
                else
                    CHECK(k == 0);
            }
        }
    }
}

TEST_CASE("Kostka numbers between hooks are binomials") {
    for (int n = 2; n <= 8; ++n)
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k) {
                BigInt v = kostka(Partition::hook(n, m), Partition::hook(n, k));
                if (m <= k)
                    CHECK(v == binomial(static_cast<unsigned>(k), static_cast<unsigned>(m)));
                else
                    CHECK(v == 0);
            }
}
