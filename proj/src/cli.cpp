#include "cyclefree/cli.hpp"

#include "cyclefree/birkhoff.hpp"
#include "cyclefree/characters.hpp"
#include "cyclefree/classfunc.hpp"
#include "cyclefree/cycles.hpp"
#include "cyclefree/labeling.hpp"
#include "cyclefree/numeric.hpp"
#include "cyclefree/partition.hpp"
#include "cyclefree/perm.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cyclefree {

namespace {

std::string read_input(const std::string& path, std::istream& fallback) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << fallback.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw FormatError("cannot open input file: " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

void write_output(const std::string& path, std::ostream& fallback, const std::string& text) {
    if (path.empty() || path == "-") {
        fallback << text;
        fallback.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open output file: " + path);
    f << text;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string join_lengths(const std::vector<int>& lens) {
    std::ostringstream os;
    for (size_t i = 0; i < lens.size(); ++i) {
        if (i) os << ',';
        os << lens[i];
    }
    return os.str();
}

int largest_budget_k(int n) {
    int best = 0;
    for (int k = 1; k <= n - 1; ++k) {
        BigInt t = falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k));
        if (t * t > 100000000) break;
        best = k;
    }
    return best;
}

} // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"simple-cycle-free labelings of K_{n,n}, Birkhoff-graph independent sets, "
                 "and symmetric-group character checks"};
    app.require_subcommand(1);

    auto* sc_construct = app.add_subcommand("construct", "recursive F_2 labeling, d = 3n");
    int construct_n = 0;
    std::string construct_out;
    sc_construct->add_option("--n", construct_n, "side of K_{n,n}, power of two >= 2")->required();
    sc_construct->add_option("--out", construct_out, "output file (default stdout)");

    auto* sc_random = app.add_subcommand("random-label", "uniform random labeling");
    int rnd_n = 0, rnd_d = 0, rnd_q = 2;
    std::uint64_t rnd_seed = 0;
    std::string rnd_out;
    sc_random->add_option("--n", rnd_n, "side of K_{n,n}")->required();
    sc_random->add_option("--d", rnd_d, "label length")->required();
    sc_random->add_option("--q", rnd_q, "modulus (default 2)");
    sc_random->add_option("--seed", rnd_seed, "RNG seed")->required();
    sc_random->add_option("--out", rnd_out, "output file (default stdout)");

    auto* sc_verify = app.add_subcommand("verify", "check a labeling for zero-sum simple cycles");
    std::string verify_in;
    bool verify_exhaustive = false;
    std::uint64_t verify_samples = 0, verify_seed = 0;
    sc_verify->add_option("--in", verify_in, "labeling file (default stdin)");
    auto* vopt_ex = sc_verify->add_flag("--exhaustive", verify_exhaustive, "scan every cycle (default)");
    auto* vopt_s = sc_verify->add_option("--samples", verify_samples, "sampled mode: number of draws");
    auto* vopt_seed = sc_verify->add_option("--seed", verify_seed, "RNG seed for sampled mode");
    vopt_s->excludes(vopt_ex)->needs(vopt_seed);

    auto* sc_cycles = app.add_subcommand("cycles", "enumerate or count simple cycles of K_{n,n}");
    int cycles_n = 0;
    bool cycles_count_only = false;
    sc_cycles->add_option("--n", cycles_n, "side of K_{n,n}")->required();
    sc_cycles->add_flag("--count-only", cycles_count_only, "print the closed-form count only");

    auto* sc_reduce = app.add_subcommand("reduce", "largest matching-sum fiber of a labeling");
    std::string reduce_in, reduce_out;
    sc_reduce->add_option("--in", reduce_in, "labeling file (default stdin)");
    sc_reduce->add_option("--out", reduce_out, "output file (default stdout)");

    auto* sc_indep = app.add_subcommand("indep", "independent sets in the Birkhoff polytope graph");
    sc_indep->require_subcommand(1);
    auto* sc_ibuild = sc_indep->add_subcommand("build", "enumerate the dyadic block-system set");
    int ibuild_n = 0;
    std::string ibuild_out;
    sc_ibuild->add_option("--n", ibuild_n, "n, power of two")->required();
    sc_ibuild->add_option("--out", ibuild_out, "output file (default stdout)");
    auto* sc_iverify = sc_indep->add_subcommand("verify", "check pairwise non-adjacency");
    std::string iverify_in;
    std::uint64_t iverify_samples = 0, iverify_seed = 0;
    sc_iverify->add_option("--in", iverify_in, "permutation set file (default stdin)");
    auto* iopt_s = sc_iverify->add_option("--samples", iverify_samples, "sampled mode: number of pairs");
    auto* iopt_seed = sc_iverify->add_option("--seed", iverify_seed, "RNG seed for sampled mode");
    iopt_s->needs(iopt_seed);
    auto* sc_isample = sc_indep->add_subcommand("sample", "draw members of the block-system set");
    int isample_n = 0;
    std::uint64_t isample_count = 0, isample_seed = 0;
    std::string isample_out;
    sc_isample->add_option("--n", isample_n, "n, power of two")->required();
    sc_isample->add_option("--count", isample_count, "number of draws")->required();
    sc_isample->add_option("--seed", isample_seed, "RNG seed")->required();
    sc_isample->add_option("--out", isample_out, "output file (default stdout)");

    auto* sc_mind = app.add_subcommand("mind", "smallest d with a cycle-free F_2^d labeling");
    int mind_n = 0;
    sc_mind->add_option("--n", mind_n, "side of K_{n,n} (2 or 3)")->required();

    auto* sc_chars = app.add_subcommand("chars", "hook characters on the n-cycle class");
    int chars_n = 0;
    bool chars_table = false;
    sc_chars->add_option("--n", chars_n, "symmetric group degree")->required();
    sc_chars->add_flag("--table", chars_table, "full character table with class sizes");

    auto* sc_analyze = app.add_subcommand("analyze", "spectral report for a permutation set");
    std::string analyze_in;
    int analyze_kmax = 0;
    sc_analyze->add_option("--in", analyze_in, "permutation set file (default stdin)");
    sc_analyze->add_option("--k-max", analyze_kmax, "largest tuple size for uniformity (default: budget)");

    auto* sc_series = app.add_subcommand("series", "alternating hook series lower bound");
    double series_c = 0.0;
    int series_n = 0, series_terms = 100;
    sc_series->add_option("--c", series_c, "uniformity constant")->required();
    sc_series->add_option("--n", series_n, "degree (n >= 8 uses the sharper second term)")->required();
    sc_series->add_option("--terms", series_terms, "odd terms to sum (default 100)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(sc_construct)) {
            write_output(construct_out, out, encode_labeling(construct_recursive(construct_n)));
            return 0;
        }

        if (app.got_subcommand(sc_random)) {
            write_output(rnd_out, out, encode_labeling(construct_random(rnd_n, rnd_d, rnd_q, rnd_seed)));
            return 0;
        }

        if (app.got_subcommand(sc_verify)) {
            Labeling g = decode_labeling(read_input(verify_in, in));
            VerifyOptions o;
            o.exhaustive = (vopt_s->count() == 0);
            o.samples = verify_samples;
            o.seed = verify_seed;
            CycleFreeReport r = verify_cycle_free(g, o);
            out << report_line(r) << "\n";
            return r.pass ? 0 : 1;
        }

        if (app.got_subcommand(sc_cycles)) {
            if (cycles_count_only) {
                out << "count=" << count_simple_cycles(cycles_n).str() << "\n";
                return 0;
            }
            if (cycles_n < 2) return 0; // no cycles to list
            if (count_simple_cycles(cycles_n) > 300000000)
                throw BudgetError("cycles: enumeration beyond n = 8 refused; use --count-only");
            std::ostringstream os;
            CycleStream cs(cycles_n);
            const SimpleCycle* c;
            while ((c = cs.next()) != nullptr) os << cycle_to_text(*c) << "\n";
            out << os.str();
            return 0;
        }

        if (app.got_subcommand(sc_reduce)) {
            Labeling g = decode_labeling(read_input(reduce_in, in));
            auto [h, fiber] = best_fiber(g);
            err << "h=" << h.digits() << " size=" << fiber.size() << "\n";
            write_output(reduce_out, out, encode_permset(fiber));
            return 0;
        }

        if (app.got_subcommand(sc_indep)) {
            if (sc_indep->got_subcommand(sc_ibuild)) {
                BlockSystem sys = make_block_system(ibuild_n);
                BlocksetEnumeration e = blockset_enumerate(sys);
                write_output(ibuild_out, out, encode_permset(e.set));
                return 0;
            }
            if (sc_indep->got_subcommand(sc_iverify)) {
                PermSet s = decode_permset(read_input(iverify_in, in));
                IndepOptions o;
                o.exhaustive = (iopt_s->count() == 0);
                o.samples = iverify_samples;
                o.seed = iverify_seed;
                IndependenceReport r = verify_independent(s, o);
                out << "verdict=" << (r.pass ? "pass" : "fail") << "\n";
                out << "size=" << s.size() << "\n";
                out << "pairs=" << r.pairs_checked << "\n";
                if (r.violation) {
                    out << "pi=" << perm_line(r.violation->first) << "\n";
                    out << "pi2=" << perm_line(r.violation->second) << "\n";
                    out << "tau_lengths=" << join_lengths(r.tau_lengths) << "\n";
                }
                return r.pass ? 0 : 1;
            }
            BlockSystem sys = make_block_system(isample_n);
            Rng rng(isample_seed);
            std::ostringstream os;
            for (std::uint64_t i = 0; i < isample_count; ++i)
                os << perm_line(blockset_sample(sys, rng)) << "\n";
            write_output(isample_out, out, os.str());
            return 0;
        }

        if (app.got_subcommand(sc_mind)) {
            out << "min_d=" << search_min_d(mind_n) << "\n";
            return 0;
        }

        if (app.got_subcommand(sc_chars)) {
            if (chars_table && chars_n > 14)
                throw BudgetError("chars: full table limited to n <= 14");
            Partition ncycle(std::vector<int>{chars_n});
            if (chars_table) {
                std::vector<Partition> ps = partitions(chars_n);
                for (const Partition& mu : ps)
                    out << "class[" << mu.str() << "]=" << class_size(mu).str() << "\n";
                for (const Partition& lam : ps)
                    for (const Partition& mu : ps)
                        out << "chi[" << lam.str() << "][" << mu.str() << "]=" << mn_character(lam, mu)
                            << "\n";
            } else {
                for (int m = 0; m < chars_n; ++m)
                    out << "chi[h_" << m << "][" << ncycle.str()
                        << "]=" << mn_character(Partition::hook(chars_n, m), ncycle) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(sc_analyze)) {
            PermSet s = decode_permset(read_input(analyze_in, in));
            int n = s.n;
            ClassFunction phi = phi_from_set(s);
            int sign = set_sign(s);
            out << "n=" << n << "\n";
            out << "size=" << s.size() << "\n";
            out << "sign=" << (sign > 0 ? "even" : sign < 0 ? "odd" : "mixed") << "\n";
            bool nonneg = true;
            for (int m = 0; m < n; ++m)
                out << "chi[h_" << m << "]=" << rational_str(chi_on_phi(Partition::hook(n, m), phi))
                    << "\n";
            out << "ip_chars=" << rational_str(ip_characters(phi)) << "\n";
            out << "ip_direct=" << rational_str(ip_direct(s)) << "\n";
            int kmax = analyze_kmax > 0 ? std::min(analyze_kmax, n - 1) : largest_budget_k(n);
            for (int k = 2; k <= kmax; k += 2)
                out << "c_emp[" << k << "]=" << fixed6(uniformity(s, k).c_emp) << "\n";
            bool dual_ok = true, dual_known = (sign != 0);
            if (dual_known) dual_ok = duality_check(s);
            out << "duality=" << (dual_known ? (dual_ok ? "pass" : "fail") : "skipped") << "\n";
            for (const Partition& lam : partitions(n))
                if (chi_on_phi(lam, phi) < 0) {
                    nonneg = false;
                    break;
                }
            out << "nonneg=" << (nonneg ? "pass" : "fail") << "\n";
            bool bound_ok = bound_check(BigInt(s.size()), n);
            out << "bound=" << (bound_ok ? "pass" : "fail") << "\n";
            return (nonneg && bound_ok && (!dual_known || dual_ok)) ? 0 : 1;
        }

        // series
        double b = series_bound(series_c, series_n, series_terms);
        out << "bound=" << fixed6(b) << "\n";
        out << "refined=" << (series_n >= 8 ? 1 : 0) << "\n";
        return 0;
    } catch (const BudgetError& e) {
        err << "budget refused: " << e.what() << "\n";
        return 3;
    } catch (const FormatError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace cyclefree
