// Acceptance suite: runs every release criterion and prints one PASS/FAIL
// line per criterion. Exits nonzero if any gating criterion fails.
//
// argv[1] (optional): path to the kclique CLI binary, needed for the
// benchmark criterion; that criterion is informational either way.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kclique/cliques.hpp"
#include "kclique/graph.hpp"
#include "kclique/multidim.hpp"

using namespace kclique;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& note = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

Graph cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (std::size_t i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

IntMatrix random_01(std::size_t n, SplitMix64& rng) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.bernoulli(0.5);
    return m;
}

bool same_tensor(const MultiDimProduct& a, const MultiDimProduct& b) {
    std::vector<std::size_t> tuple(a.k(), 0);
    while (true) {
        if (a.entry(tuple) != b.entry(tuple)) return false;
        std::size_t j = a.k();
        while (j-- > 0) {
            if (++tuple[j] < a.n()) break;
            tuple[j] = 0;
            if (j == 0) return true;
        }
    }
}

// 1. Every counter agrees with the brute-force oracle across the sweep.
// 7. The divisibility invariants hold on every sweep instance (the library
//    throws std::logic_error if a tally is not divisible, so a clean sweep
//    certifies both criteria; alg1's tally is additionally re-derived here).
void criterion_oracle_sweep() {
    const auto start = std::chrono::steady_clock::now();
    bool agree = true, divisible = true;
    std::string note;
    try {
        for (std::size_t n : {10, 14, 18, 22})
            for (double p : {0.3, 0.5, 0.7})
                for (std::uint64_t seed : {1, 2, 3}) {
                    const Graph g = gen_gnp(n, p, seed);
                    for (std::size_t r = 3; r <= 6; ++r) {
                        const std::uint64_t expect = count_bruteforce(g, r).count;
                        agree &= count_triangle_method(g, r).count == expect;
                        agree &= count_alg1(g, r).count == expect;
                        agree &= count_alg2(g, r).count == expect;
                        for (std::size_t q = 1; q + 2 <= r; ++q)
                            agree &= count_alg3(g, r, q).count == expect;

                        const CliqueList l = enumerate_cliques(g, r - 1);
                        const MultiDimProduct d = common_neighbors_tensor(g, r - 1);
                        std::uint64_t t = 0;
                        for (const auto& c : l.copies) t += d.entry(c);
                        divisible &= (t % r == 0);
                        if (!agree || !divisible) throw std::logic_error("mismatch");
                    }
                }
    } catch (const std::logic_error& e) {
        agree = false;
        note = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    report(1, "oracle sweep, all counters agree exactly", agree && secs < 300.0,
           note.empty() ? "took " + std::to_string(secs) + "s" : note);
    report(7, "divisibility of every tally by its multiplicity",
           agree && divisible);
}

void criterion_lemma1() {
    SplitMix64 rng(20240501);
    bool ok = true;
    for (std::size_t k = 2; k <= 4 && ok; ++k)
        for (std::size_t n = 2; n <= 8 && ok; ++n)
            for (int trial = 0; trial < 20 && ok; ++trial) {
                std::vector<IntMatrix> mats;
                for (std::size_t j = 0; j < k; ++j) mats.push_back(random_01(n, rng));
                const MultiDimProduct ref = kdim_product_reference(mats);
                for (std::size_t k1 = 1; k1 < k && ok; ++k1)
                    ok = same_tensor(kdim_product(mats, k1), ref);
            }
    report(2, "flattened k-dim product equals the definitional oracle", ok);
}

void criterion_two_dim_coincidence() {
    SplitMix64 rng(555);
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
        const std::size_t n = 3 + rng.next_below(8);
        const std::vector<IntMatrix> mats{random_01(n, rng), random_01(n, rng)};
        const MultiDimProduct d = kdim_product(mats, 1);
        const IntMatrix expect = matmul_naive(mats[0], transpose(mats[1]));
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                ok = d.entry({i, j}) == expect(i, j);
    }
    report(3, "2-dim product coincides with A1 x A2^T", ok);
}

void criterion_lemma2() {
    bool ok = true;
    const Graph g = gen_gnp(12, 0.5, 1);
    for (std::size_t k : {2, 3}) {
        const MultiDimProduct d = common_neighbors_tensor(g, k);
        std::vector<std::size_t> tuple(k, 0);
        while (ok) {
            ok = d.entry(tuple) == common_neighbor_count(g, tuple);
            std::size_t j = k;
            bool done = false;
            while (j-- > 0) {
                if (++tuple[j] < g.n()) break;
                tuple[j] = 0;
                if (j == 0) done = true;
            }
            if (done) break;
        }
    }
    report(4, "tensor entries equal direct neighbor-set intersections", ok);
}

void criterion_triangle_identities() {
    bool ok = true;
    for (std::uint64_t seed = 1; seed <= 20 && ok; ++seed) {
        const Graph g = gen_gnp(10 + (seed % 3) * 10, 0.4, seed);  // n <= 30
        const IntMatrix a = lift(g.adjacency());
        const std::uint64_t tr = trace(matmul_naive(matmul_naive(a, a), a));
        const std::uint64_t ir = count_triangles_ir(g).count;
        ok = (tr % 6 == 0) && ir == tr / 6 && count_alg1(g, 3).count == ir;
    }
    report(5, "count_triangles_ir == trace(A^3)/6 == count_alg1(r=3)", ok);
}

void criterion_closed_forms() {
    bool ok = true;
    for (std::size_t n = 3; n <= 12 && ok; ++n)
        for (std::size_t r = 3; r <= 6 && ok; ++r) {
            const std::uint64_t expect = binomial(n, r);
            const Graph kn = complete_graph(n);
            ok = count_bruteforce(kn, r).count == expect &&
                 count_triangle_method(kn, r).count == expect &&
                 count_alg1(kn, r).count == expect &&
                 count_alg2(kn, r).count == expect;
            for (std::size_t q = 1; q + 2 <= r && ok; ++q)
                ok = count_alg3(kn, r, q).count == expect;
            if (!ok) break;
            const Graph en = empty_graph(n);
            ok = count_alg1(en, r).count == 0 && count_alg2(en, r).count == 0 &&
                 count_triangle_method(en, r).count == 0;
        }
    for (const Graph& tf : {cycle(5), petersen()})
        for (std::size_t r = 3; r <= 6 && ok; ++r) {
            ok = count_alg1(tf, r).count == 0 && count_alg2(tf, r).count == 0 &&
                 count_triangle_method(tf, r).count == 0 &&
                 count_bruteforce(tf, r).count == 0;
            for (std::size_t q = 1; q + 2 <= r && ok; ++q)
                ok = count_alg3(tf, r, q).count == 0;
        }
    report(6, "closed forms on complete, empty, and triangle-free graphs", ok);
}

bool find_result_is(const Graph& g, std::size_t r, const FindResult& res,
                    bool expect_present) {
    if (res.vertices.has_value() != expect_present) return false;
    if (!res.vertices) return true;
    return res.vertices->size() == r && is_clique(g, *res.vertices);
}

void criterion_find_detect() {
    bool ok = true;
    std::size_t positives = 0, negatives = 0;
    // 30 planted positives: 10 seeds per r.
    for (std::size_t r : {4, 5, 6})
        for (std::uint64_t seed = 1; seed <= 10 && ok; ++seed) {
            auto [g, planted] = gen_planted(24, 0.25, r, seed * 131 + r);
            ok = find_result_is(g, r, find_alg1(g, r), true) &&
                 find_result_is(g, r, find_alg2(g, r), true);
            for (std::size_t q = 1; q + 2 <= r && ok; ++q)
                ok = find_result_is(g, r, find_alg3(g, r, q), true) &&
                     detect_alg3(g, r, q);
            ++positives;
        }
    // 30 sparse negatives certified by the oracle: 10 per r.
    for (std::size_t r : {4, 5, 6}) {
        const double p = (r == 4) ? 0.12 : 0.25;
        std::uint64_t seed = 1000;
        std::size_t taken = 0;
        while (taken < 10 && ok) {
            const Graph g = gen_gnp(24, p, seed++);
            if (count_bruteforce(g, r).count != 0) continue;
            ok = find_result_is(g, r, find_alg1(g, r), false) &&
                 find_result_is(g, r, find_alg2(g, r), false);
            for (std::size_t q = 1; q + 2 <= r && ok; ++q)
                ok = find_result_is(g, r, find_alg3(g, r, q), false) &&
                     !detect_alg3(g, r, q);
            ++taken;
            ++negatives;
        }
    }
    report(8, "find/detect on planted positives and certified negatives",
           ok && positives == 30 && negatives == 30);
}

void criterion_witness_soundness() {
    SplitMix64 rng(4242);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const std::size_t n = 2 + rng.next_below(7);
        const std::size_t k = 2 + rng.next_below(3);
        std::vector<IntMatrix> mats;
        for (std::size_t j = 0; j < k; ++j) mats.push_back(random_01(n, rng));
        std::vector<std::size_t> tuple(k);
        for (auto& v : tuple) v = rng.next_below(n);
        const auto w = find_witness(mats, tuple);
        if (w) {
            for (std::size_t j = 0; j < k; ++j) ok &= mats[j](tuple[j], *w) == 1;
        } else {
            std::uint64_t entry = 0;
            for (std::size_t l = 0; l < n; ++l) {
                std::uint64_t prod = 1;
                for (std::size_t j = 0; j < k; ++j) prod &= mats[j](tuple[j], l);
                entry += prod;
            }
            ok &= entry == 0;
        }
    }
    report(9, "1000 witness queries are sound and complete", ok);
}

// Informational, non-gating: bench CSV validity plus the naive vs blocked
// multiply timing at n=512.
void criterion_bench(const char* cli_path) {
    if (cli_path == nullptr) {
        report(10, "bench CSV (informational)", true, "skipped: no CLI path given");
        return;
    }
    const std::string csv = "acceptance_bench.csv";
    const std::string cmd = std::string(cli_path) +
                            " bench --n-list 128,256,512 --p 0.1 --r 4"
                            " --algos alg2,ir_naive,ir_blocked --seed 1 --csv " +
                            csv;
    const int rc = std::system(cmd.c_str());
    bool ok = rc == 0;
    double naive512 = -1, blocked512 = -1;
    std::size_t rows = 0;
    if (ok) {
        std::ifstream in(csv);
        std::string line;
        ok = static_cast<bool>(std::getline(in, line)) &&
             line == "algorithm,n,p,r,q,k1,seed,count,elapsed_ms";
        while (ok && std::getline(in, line)) {
            ++rows;
            std::stringstream ss(line);
            std::vector<std::string> f;
            std::string tok;
            while (std::getline(ss, tok, ',')) f.push_back(tok);
            ok = f.size() == 9;
            if (ok && f[1] == "512" && f[0] == "ir_naive")
                naive512 = std::stod(f[8]);
            if (ok && f[1] == "512" && f[0] == "ir_blocked")
                blocked512 = std::stod(f[8]);
        }
        ok = ok && rows == 9 && naive512 >= 0 && blocked512 >= 0;
    }
    std::ostringstream note;
    if (naive512 >= 0 && blocked512 > 0)
        note << "n=512 multiply: naive " << naive512 << "ms, blocked "
             << blocked512 << "ms, ratio " << naive512 / blocked512
             << " (report-only)";
    report(10, "bench CSV at n in {128,256,512}, r=4 (informational)", ok,
           note.str());
    std::remove(csv.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    criterion_oracle_sweep();
    criterion_lemma1();
    criterion_two_dim_coincidence();
    criterion_lemma2();
    criterion_triangle_identities();
    criterion_closed_forms();
    criterion_find_detect();
    criterion_witness_soundness();
    criterion_bench(argc > 1 ? argv[1] : nullptr);
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed" << std::endl;
        return 1;
    }
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
}
