// kclique: generate graph instances, run the clique counters, cross-verify
// them, and benchmark.
//
// Exit codes: 0 success (detect: YES), 1 detect: NO, 2 bad flags or input,
// 3 memory/work guard tripped, 4 self-verification failure, 5 verify sweep
// disagreement.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kclique/cliques.hpp"
#include "kclique/graph.hpp"
#include "kclique/matrix.hpp"

using namespace kclique;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitVerifyFail = 4;
constexpr int kExitSweepMismatch = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VerifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SweepError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + path);
    out << text;
}

Graph load_graph(const std::string& path) {
    try {
        return parse_graph(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(e.what()) + " (" + path + ")");
    }
}

constexpr const char* kCsvHeader = "algorithm,n,p,r,q,k1,seed,count,elapsed_ms";

std::string opt_field(const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : "-";
}

// One CSV row in the bench schema; count empty + elapsed -1 marks a run the
// guard skipped.
std::string csv_row(const std::string& algorithm, std::size_t n,
                    const std::string& p, std::size_t r,
                    const std::optional<std::size_t>& q,
                    const std::optional<std::size_t>& k1,
                    const std::string& seed, const std::string& count,
                    long long elapsed_ms) {
    std::ostringstream row;
    row << algorithm << ',' << n << ',' << p << ',' << r << ',' << opt_field(q)
        << ',' << opt_field(k1) << ',' << seed << ',' << count << ','
        << elapsed_ms;
    return row.str();
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoull(tok));
    }
    if (out.empty()) throw UsageError("empty list flag: " + csv);
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw UsageError("empty list flag: " + csv);
    return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    if (out.empty()) throw UsageError("empty list flag: " + csv);
    return out;
}

std::string format_p(double p) {
    std::ostringstream ss;
    ss << p;
    return ss.str();
}

std::size_t default_q(std::size_t r) { return std::max<std::size_t>(1, r / 3); }

CountReport run_counter(const Graph& g, const std::string& algo, std::size_t r,
                        std::optional<std::size_t> q,
                        std::optional<std::size_t> k1) {
    if (algo == "brute") return count_bruteforce(g, r);
    if (algo == "triangle") return count_triangle_method(g, r);
    if (algo == "alg1") return count_alg1(g, r, k1.value_or(0));
    if (algo == "alg2") return count_alg2(g, r);
    if (algo == "alg3") return count_alg3(g, r, q.value_or(default_q(r)));
    if (algo == "ir") {
        if (r != 3) throw UsageError("--algo ir only counts triangles (r=3)");
        return count_triangles_ir(g);
    }
    throw UsageError("unknown algorithm: " + algo);
}

// Triangle counting timed around a single square multiply, used by bench to
// put the naive and blocked backends side by side.
CountReport bench_matmul_triangles(const Graph& g, bool blocked,
                                   std::size_t tile) {
    const auto start = std::chrono::steady_clock::now();
    const IntMatrix a = lift(g.adjacency());
    const IntMatrix c = blocked ? matmul_blocked(a, a, tile) : matmul_naive(a, a);
    std::uint64_t t = 0;
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) t += c(u, v);
    return {.algorithm = blocked ? "ir_blocked" : "ir_naive", .r = 3,
            .count = t / 3,
            .elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count()};
}

int cmd_gen(const std::string& model, std::size_t n, double p, std::size_t r,
            std::uint64_t seed, const std::string& out) {
    Graph g;
    std::vector<std::size_t> planted;
    if (model == "gnp") {
        g = gen_gnp(n, p, seed);
    } else if (model == "planted") {
        auto res = gen_planted(n, p, r, seed);
        g = std::move(res.first);
        planted = std::move(res.second);
    } else if (model == "complete") {
        g = complete_graph(n);
    } else if (model == "empty") {
        g = empty_graph(n);
    } else {
        throw UsageError("unknown model: " + model);
    }
    write_file(out, emit_edge_list(g));
    if (model == "planted") {
        std::ostringstream side;
        for (std::size_t i = 0; i < planted.size(); ++i)
            side << planted[i] << (i + 1 == planted.size() ? '\n' : ' ');
        write_file(out + ".planted", side.str());
    }
    return 0;
}

int cmd_count(const std::string& in, std::size_t r, const std::string& algo,
              std::optional<std::size_t> q, std::optional<std::size_t> k1,
              const std::string& csv) {
    const Graph g = load_graph(in);
    const CountReport rep = run_counter(g, algo, r, q, k1);
    std::cout << "count=" << rep.count << '\n';
    if (!csv.empty()) {
        std::ofstream out(csv, std::ios::app);
        if (!out) throw UsageError("cannot open csv file: " + csv);
        if (out.tellp() == 0) out << kCsvHeader << '\n';
        out << csv_row(rep.algorithm, g.n(), "-", rep.r, rep.q, rep.k1, "-",
                       std::to_string(rep.count),
                       static_cast<long long>(rep.elapsed_ms))
            << '\n';
    }
    return 0;
}

bool run_detect(const Graph& g, const std::string& algo, std::size_t r,
                std::optional<std::size_t> q) {
    if (algo == "alg3") return detect_alg3(g, r, q.value_or(default_q(r)));
    if (algo == "alg1") return count_alg1(g, r).count > 0;
    if (algo == "alg2") return count_alg2(g, r).count > 0;
    throw UsageError("unknown detect algorithm: " + algo);
}

int cmd_detect(const std::string& in, std::size_t r, const std::string& algo,
               std::optional<std::size_t> q) {
    const Graph g = load_graph(in);
    const bool found = run_detect(g, algo, r, q);
    std::cout << (found ? "YES" : "NO") << '\n';
    return found ? 0 : 1;
}

int cmd_find(const std::string& in, std::size_t r, const std::string& algo,
             std::optional<std::size_t> q) {
    const Graph g = load_graph(in);
    FindResult res;
    if (algo == "alg1") res = find_alg1(g, r);
    else if (algo == "alg2") res = find_alg2(g, r);
    else if (algo == "alg3") res = find_alg3(g, r, q.value_or(default_q(r)));
    else throw UsageError("unknown find algorithm: " + algo);
    if (!res.vertices) {
        std::cout << "none\n";
        return 0;
    }
    if (res.vertices->size() != r || !is_clique(g, *res.vertices))
        throw VerifyError("find returned a vertex set that is not a K_r copy");
    for (std::size_t i = 0; i < res.vertices->size(); ++i)
        std::cout << (*res.vertices)[i]
                  << (i + 1 == res.vertices->size() ? '\n' : ' ');
    return 0;
}

int cmd_verify(const std::string& n_list, const std::string& p_list,
               const std::string& r_list, const std::string& seed_list) {
    const auto ns = parse_size_list(n_list);
    const auto ps = parse_double_list(p_list);
    const auto rs = parse_size_list(r_list);
    const auto seeds = parse_size_list(seed_list);
    for (std::size_t n : ns)
        for (double p : ps)
            for (std::size_t seed : seeds) {
                const Graph g = gen_gnp(n, p, seed);
                for (std::size_t r : rs) {
                    const std::uint64_t expected = count_bruteforce(g, r).count;
                    std::vector<std::pair<std::string, std::uint64_t>> got;
                    got.emplace_back("triangle", count_triangle_method(g, r).count);
                    got.emplace_back("alg1", count_alg1(g, r).count);
                    got.emplace_back("alg2", count_alg2(g, r).count);
                    for (std::size_t q = 1; q + 2 <= r; ++q)
                        got.emplace_back("alg3(q=" + std::to_string(q) + ")",
                                         count_alg3(g, r, q).count);
                    if (r == 3) {
                        const IntMatrix a = lift(g.adjacency());
                        const std::uint64_t tr =
                            trace(matmul_naive(matmul_naive(a, a), a)) / 6;
                        got.emplace_back("trace(A^3)/6", tr);
                        got.emplace_back("ir", count_triangles_ir(g).count);
                    }
                    for (const auto& [name, value] : got)
                        if (value != expected)
                            throw SweepError(
                                "disagreement: n=" + std::to_string(n) +
                                " p=" + format_p(p) + " seed=" + std::to_string(seed) +
                                " r=" + std::to_string(r) + " algorithm=" + name +
                                " expected=" + std::to_string(expected) +
                                " got=" + std::to_string(value));
                    std::cout << "n=" << n << " p=" << format_p(p)
                              << " seed=" << seed << " r=" << r
                              << " count=" << expected << " agree=" << got.size()
                              << " ok\n";
                }
            }
    std::cout << "verify: all algorithms agree\n";
    return 0;
}

int cmd_bench(const std::string& n_list, double p, std::size_t r,
              const std::string& algos, std::optional<std::size_t> q,
              std::optional<std::size_t> k1, std::uint64_t seed,
              const std::string& csv, std::size_t tile) {
    const auto ns = parse_size_list(n_list);
    const auto names = parse_string_list(algos);
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (std::size_t n : ns) {
        const Graph g = gen_gnp(n, p, seed);
        // (r, count) groups seen at this n; any disagreement is fatal.
        std::map<std::size_t, std::uint64_t> group;
        for (const std::string& name : names) {
            try {
                CountReport rep;
                if (name == "ir_naive") rep = bench_matmul_triangles(g, false, tile);
                else if (name == "ir_blocked") rep = bench_matmul_triangles(g, true, tile);
                else rep = run_counter(g, name, r, q, k1);
                auto [it, inserted] = group.try_emplace(rep.r, rep.count);
                if (!inserted && it->second != rep.count)
                    throw VerifyError("bench: count mismatch at n=" +
                                      std::to_string(n) + " r=" +
                                      std::to_string(rep.r) + " algorithm=" + name);
                out << csv_row(rep.algorithm, n, format_p(p), rep.r, rep.q,
                               rep.k1, std::to_string(seed),
                               std::to_string(rep.count),
                               static_cast<long long>(rep.elapsed_ms))
                    << '\n';
            } catch (const guard_error&) {
                out << csv_row(name, n, format_p(p), r, q, k1,
                               std::to_string(seed), "", -1)
                    << '\n';
            }
        }
    }
    if (csv.empty()) std::cout << out.str();
    else write_file(csv, out.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clique counting via multi-dimensional matrix products"};
    app.require_subcommand(1);
    std::size_t threads = 1;
    app.add_option("--threads", threads,
                   "worker threads (only 1 is supported; kept for CLI stability)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1}));

    std::string model = "gnp", out_path, in_path, algo = "alg1", csv_path;
    std::size_t n = 0, r = 3;
    double p = 0.5;
    std::uint64_t seed = 0;
    std::optional<std::size_t> q_opt, k1_opt;

    auto* gen = app.add_subcommand("gen", "generate a graph instance");
    gen->add_option("--model", model, "gnp|planted|complete|empty");
    gen->add_option("--n", n, "vertex count")->required();
    gen->add_option("--p", p, "edge probability");
    gen->add_option("--r", r, "planted clique size");
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--out", out_path, "output edge-list file")->required();

    auto* count = app.add_subcommand("count", "count K_r copies");
    count->add_option("--in", in_path, "input graph file")->required();
    count->add_option("--r", r, "clique size")->required();
    count->add_option("--algo", algo, "brute|triangle|alg1|alg2|alg3|ir");
    count->add_option("--q", q_opt, "alg3 split parameter");
    count->add_option("--k1", k1_opt, "alg1 tensor split");
    count->add_option("--csv", csv_path, "append a CSV record here");

    auto* detect = app.add_subcommand("detect", "detect a K_r copy (YES/NO)");
    detect->add_option("--in", in_path)->required();
    detect->add_option("--r", r)->required();
    detect->add_option("--algo", algo, "alg1|alg2|alg3");
    detect->add_option("--q", q_opt);

    auto* find = app.add_subcommand("find", "find one K_r copy");
    find->add_option("--in", in_path)->required();
    find->add_option("--r", r)->required();
    find->add_option("--algo", algo, "alg1|alg2|alg3");
    find->add_option("--q", q_opt);

    std::string n_list = "10,14,18,22", p_list = "0.3,0.5,0.7",
                r_list = "3,4,5,6", seed_list = "1,2,3";
    auto* verify = app.add_subcommand(
        "verify", "cross-check all counters on a seeded sweep");
    verify->add_option("--n-list", n_list);
    verify->add_option("--p-list", p_list);
    verify->add_option("--r-list", r_list);
    verify->add_option("--seeds", seed_list);

    std::string bench_algos = "alg1,alg2";
    std::size_t tile = 64;
    auto* bench = app.add_subcommand("bench", "time algorithms, emit CSV");
    bench->add_option("--n-list", n_list)->required();
    bench->add_option("--p", p);
    bench->add_option("--r", r)->required();
    bench->add_option("--algos", bench_algos,
                      "comma list: brute|triangle|alg1|alg2|alg3|ir_naive|ir_blocked");
    bench->add_option("--q", q_opt);
    bench->add_option("--k1", k1_opt);
    bench->add_option("--seed", seed);
    bench->add_option("--csv", csv_path, "CSV output file (default stdout)");
    bench->add_option("--tile", tile, "blocked multiply tile size");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_gen(model, n, p, r, seed, out_path);
        if (count->parsed()) return cmd_count(in_path, r, algo, q_opt, k1_opt, csv_path);
        if (detect->parsed()) return cmd_detect(in_path, r, algo, q_opt);
        if (find->parsed()) return cmd_find(in_path, r, algo, q_opt);
        if (verify->parsed()) return cmd_verify(n_list, p_list, r_list, seed_list);
        if (bench->parsed())
            return cmd_bench(n_list, p, r, bench_algos, q_opt, k1_opt, seed,
                             csv_path, tile);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const SweepError& e) {
        std::cerr << "verify: " << e.what() << '\n';
        return kExitSweepMismatch;
    } catch (const VerifyError& e) {
        std::cerr << "verification: " << e.what() << '\n';
        return kExitVerifyFail;
    }
}
