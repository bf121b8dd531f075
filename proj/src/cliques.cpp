#include "kclique/cliques.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace kclique {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_r(std::size_t r) {
    if (r < 3) throw std::invalid_argument("clique algorithms require r >= 3");
}

void check_divisible(std::uint64_t total, std::uint64_t divisor,
                     const char* what) {
    if (divisor == 0 || total % divisor != 0)
        throw std::logic_error(std::string(what) + ": tally not divisible by multiplicity");
}

bool disjoint_sorted(std::span<const std::size_t> a,
                     std::span<const std::size_t> b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}

// Disjoint clique copies whose union induces a clique, i.e. all cross pairs
// are edges.
bool joins_to_clique(const Graph& g, std::span<const std::size_t> a,
                     std::span<const std::size_t> b) {
    if (!disjoint_sorted(a, b)) return false;
    for (std::size_t u : a)
        for (std::size_t v : b)
            if (!g.adjacent(u, v)) return false;
    return true;
}

std::vector<std::size_t> sorted_union(std::span<const std::size_t> a,
                                      std::span<const std::size_t> b) {
    std::vector<std::size_t> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

void cliques_within_backtrack(const Graph& g, std::size_t t,
                              std::vector<std::size_t>& current,
                              const std::vector<std::uint64_t>& cand,
                              std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == t) {
        out.push_back(current);
        return;
    }
    const std::size_t first = current.empty() ? 0 : current.back() + 1;
    for (std::size_t v = first; v < g.n(); ++v) {
        if (!((cand[v / 64] >> (v % 64)) & 1u)) continue;
        std::vector<std::uint64_t> next_cand(cand.size());
        auto nb = g.neighbor_words(v);
        for (std::size_t w = 0; w < cand.size(); ++w) next_cand[w] = cand[w] & nb[w];
        current.push_back(v);
        cliques_within_backtrack(g, t, current, next_cand, out);
        current.pop_back();
    }
}

// All K_t copies of G whose vertices all lie in `allowed`.
std::vector<std::vector<std::size_t>> cliques_within(
    const Graph& g, std::size_t t, const std::vector<std::size_t>& allowed) {
    std::vector<std::uint64_t> cand((g.n() + 63) / 64, 0);
    for (std::size_t v : allowed) cand[v / 64] |= std::uint64_t{1} << (v % 64);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    current.reserve(t);
    cliques_within_backtrack(g, t, current, cand, out);
    return out;
}

void check_matrix_guard(std::uint64_t rows, std::uint64_t cols,
                        std::uint64_t limit, const char* what) {
    if (cols != 0 && rows > limit / cols)
        throw guard_error(std::string(what) + ": incidence matrix exceeds the entry limit");
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t res = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        res = res * (n - k + i) / i;
    }
    return res;
}

CountReport count_bruteforce(const Graph& g, std::size_t r,
                             std::uint64_t subset_limit) {
    if (r < 1) throw std::invalid_argument("count_bruteforce: r must be >= 1");
    const auto start = Clock::now();
    CountReport rep;
    rep.algorithm = "brute";
    rep.r = r;
    if (r > g.n()) {
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    if (binomial(g.n(), r) > subset_limit)
        throw guard_error("count_bruteforce: C(n,r) exceeds the work limit");
    // Plain lexicographic combination walk; no neighborhood pruning so this
    // stays independent of enumerate_cliques.
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::uint64_t count = 0;
    while (true) {
        if (is_clique(g, idx)) ++count;
        std::size_t i = r;
        while (i-- > 0) {
            if (idx[i] != i + g.n() - r) break;
            if (i == 0) {
                rep.count = count;
                rep.elapsed_ms = ms_since(start);
                return rep;
            }
        }
        ++idx[i];
        for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

CountReport count_triangles_ir(const Graph& g) {
    const auto start = Clock::now();
    const IntMatrix c = two_path_counts(g);
    std::uint64_t t = 0;
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) t += c(u, v);
    check_divisible(t, 3, "count_triangles_ir");
    CountReport rep;
    rep.algorithm = "ir";
    rep.r = 3;
    rep.count = t / 3;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

CountReport count_triangle_method(const Graph& g, std::size_t r,
                                  std::uint64_t entry_limit) {
    check_r(r);
    const auto start = Clock::now();
    const std::size_t p1 = r / 3;
    const std::size_t p2 = (r + 1) / 3;
    const std::size_t p3 = (r + 2) / 3;
    assert(p1 + p2 + p3 == r);
    const CliqueList l1 = enumerate_cliques(g, p1);
    const CliqueList l2 = enumerate_cliques(g, p2);
    const CliqueList l3 = enumerate_cliques(g, p3);
    check_matrix_guard(l1.size(), l2.size(), entry_limit, "count_triangle_method");
    check_matrix_guard(l2.size(), l3.size(), entry_limit, "count_triangle_method");

    IntMatrix m12(l1.size(), l2.size());
    for (std::size_t a = 0; a < l1.size(); ++a)
        for (std::size_t b = 0; b < l2.size(); ++b)
            if (joins_to_clique(g, l1.copies[a], l2.copies[b])) m12(a, b) = 1;
    IntMatrix m23(l2.size(), l3.size());
    for (std::size_t b = 0; b < l2.size(); ++b)
        for (std::size_t c = 0; c < l3.size(); ++c)
            if (joins_to_clique(g, l2.copies[b], l3.copies[c])) m23(b, c) = 1;

    const IntMatrix paths = matmul_blocked(m12, m23);
    std::uint64_t total = 0;
    for (std::size_t a = 0; a < l1.size(); ++a)
        for (std::size_t c = 0; c < l3.size(); ++c)
            if (paths(a, c) != 0 &&
                joins_to_clique(g, l1.copies[a], l3.copies[c]))
                total += paths(a, c);
    // Each K_r copy appears once per ordered partition into (p1,p2,p3) parts.
    const std::uint64_t multiplicity = binomial(r, p1) * binomial(r - p1, p2);
    check_divisible(total, multiplicity, "count_triangle_method");
    CountReport rep;
    rep.algorithm = "triangle";
    rep.r = r;
    rep.count = total / multiplicity;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

CountReport count_alg1(const Graph& g, std::size_t r, std::size_t k1,
                       std::uint64_t entry_limit) {
    check_r(r);
    const auto start = Clock::now();
    const std::size_t k = r - 1;
    if (k1 == 0) k1 = (k + 1) / 2;
    CountReport rep;
    rep.algorithm = "alg1";
    rep.r = r;
    rep.k1 = k1;
    const CliqueList l = enumerate_cliques(g, k);
    if (l.size() == 0) {
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    const MultiDimProduct d = common_neighbors_tensor(g, k, k1, entry_limit);
    std::uint64_t t = 0;
    for (const auto& c : l.copies) t += d.entry(c);
    check_divisible(t, r, "count_alg1");
    rep.count = t / r;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

FindResult find_alg1(const Graph& g, std::size_t r, std::uint64_t entry_limit) {
    check_r(r);
    const std::size_t k = r - 1;
    const CliqueList l = enumerate_cliques(g, k);
    if (l.size() == 0) return {};
    const MultiDimProduct d =
        common_neighbors_tensor(g, k, (k + 1) / 2, entry_limit);
    const std::vector<IntMatrix> mats(k, lift(g.adjacency()));
    for (const auto& c : l.copies) {
        if (d.entry(c) == 0) continue;
        const auto witness = find_witness(mats, c);
        assert(witness.has_value());
        return {sorted_union(c, std::span<const std::size_t>(&*witness, 1))};
    }
    return {};
}

namespace {

// Shared by Algorithm 2's count and find paths: the |V| x |L| extension
// incidence matrix B over all K_{r-2} copies.
struct Alg2State {
    CliqueList l;
    IntMatrix b;
};

Alg2State alg2_incidence(const Graph& g, std::size_t r,
                         std::uint64_t entry_limit) {
    Alg2State st;
    st.l = enumerate_cliques(g, r - 2);
    check_matrix_guard(g.n(), st.l.size(), entry_limit, "alg2");
    st.b = IntMatrix(g.n(), st.l.size());
    for (std::size_t h = 0; h < st.l.size(); ++h)
        for (std::size_t v : extension_set(g, st.l.copies[h]))
            st.b(v, h) = 1;
    return st;
}

}  // namespace

CountReport count_alg2(const Graph& g, std::size_t r,
                       std::uint64_t entry_limit) {
    check_r(r);
    const auto start = Clock::now();
    CountReport rep;
    rep.algorithm = "alg2";
    rep.r = r;
    const Alg2State st = alg2_incidence(g, r, entry_limit);
    if (st.l.size() == 0) {
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    const IntMatrix c = matmul_blocked(st.b, transpose(st.b));
    std::uint64_t t = 0;
    for (std::size_t v = 0; v < g.n(); ++v)
        for (std::size_t u = v + 1; u < g.n(); ++u)
            if (g.adjacent(v, u)) t += c(v, u);
    check_divisible(t, binomial(r, 2), "count_alg2");
    rep.count = t / binomial(r, 2);
    rep.elapsed_ms = ms_since(start);
    return rep;
}

FindResult find_alg2(const Graph& g, std::size_t r, std::uint64_t entry_limit) {
    check_r(r);
    const Alg2State st = alg2_incidence(g, r, entry_limit);
    if (st.l.size() == 0) return {};
    const IntMatrix c = matmul_blocked(st.b, transpose(st.b));
    for (std::size_t v = 0; v < g.n(); ++v)
        for (std::size_t u = v + 1; u < g.n(); ++u) {
            if (!g.adjacent(v, u) || c(v, u) == 0) continue;
            for (std::size_t h = 0; h < st.l.size(); ++h) {
                if (st.b(v, h) == 0 || st.b(u, h) == 0) continue;
                const std::size_t pair[2] = {v, u};
                return {sorted_union(st.l.copies[h], pair)};
            }
        }
    return {};
}

namespace {

// Everything Algorithm 3 needs after the incidence construction: the K_q
// list, the sparse row universes of K_{r1}/K_{r2} copies, and B1, B2.
struct Alg3State {
    std::size_t r1 = 0, r2 = 0;
    CliqueList l;
    std::vector<std::vector<std::size_t>> rows1, rows2;  // lex-sorted copies
    IntMatrix b1, b2;
};

Alg3State alg3_incidence(const Graph& g, std::size_t r, std::size_t q,
                         std::uint64_t entry_limit) {
    check_r(r);
    if (q < 1 || q > r - 2)
        throw std::invalid_argument("alg3: q must lie in [1, r-2]");
    Alg3State st;
    st.r1 = (r - q + 1) / 2;
    st.r2 = (r - q) / 2;
    st.l = enumerate_cliques(g, q);
    // Row universes hold only copies that occur in some L_i(H); a map keyed
    // by the vertex tuple gives lex-ordered row indices.
    std::map<std::vector<std::size_t>, std::size_t> u1, u2;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ones1, ones2;
    for (std::size_t h = 0; h < st.l.size(); ++h) {
        const auto s = extension_set(g, st.l.copies[h]);
        for (auto& copy : cliques_within(g, st.r1, s))
            u1.try_emplace(std::move(copy), 0);
        for (auto& copy : cliques_within(g, st.r2, s))
            u2.try_emplace(std::move(copy), 0);
    }
    std::size_t idx = 0;
    for (auto& [copy, row] : u1) { row = idx++; st.rows1.push_back(copy); }
    idx = 0;
    for (auto& [copy, row] : u2) { row = idx++; st.rows2.push_back(copy); }
    check_matrix_guard(st.rows1.size(), st.l.size(), entry_limit, "alg3");
    check_matrix_guard(st.rows2.size(), st.l.size(), entry_limit, "alg3");
    check_matrix_guard(st.rows1.size(), st.rows2.size(), entry_limit, "alg3");
    st.b1 = IntMatrix(st.rows1.size(), st.l.size());
    st.b2 = IntMatrix(st.rows2.size(), st.l.size());
    for (std::size_t h = 0; h < st.l.size(); ++h) {
        const auto s = extension_set(g, st.l.copies[h]);
        for (const auto& copy : cliques_within(g, st.r1, s))
            st.b1(u1.at(copy), h) = 1;
        for (const auto& copy : cliques_within(g, st.r2, s))
            st.b2(u2.at(copy), h) = 1;
    }
    return st;
}

// A (s1, s2) row pair contributes iff the two copies are disjoint and their
// union induces a K_{r-q}.
bool alg3_pair_qualifies(const Graph& g, const Alg3State& st, std::size_t i,
                         std::size_t j) {
    return joins_to_clique(g, st.rows1[i], st.rows2[j]);
}

}  // namespace

bool detect_alg3(const Graph& g, std::size_t r, std::size_t q,
                 std::uint64_t entry_limit) {
    const Alg3State st = alg3_incidence(g, r, q, entry_limit);
    if (st.l.size() == 0) return false;
    const IntMatrix c = matmul_blocked(st.b1, transpose(st.b2));
    for (std::size_t i = 0; i < st.rows1.size(); ++i)
        for (std::size_t j = 0; j < st.rows2.size(); ++j)
            if (c(i, j) != 0 && alg3_pair_qualifies(g, st, i, j)) return true;
    return false;
}

CountReport count_alg3(const Graph& g, std::size_t r, std::size_t q,
                       std::uint64_t entry_limit) {
    const auto start = Clock::now();
    const Alg3State st = alg3_incidence(g, r, q, entry_limit);
    CountReport rep;
    rep.algorithm = "alg3";
    rep.r = r;
    rep.q = q;
    if (st.l.size() == 0) {
        rep.elapsed_ms = ms_since(start);
        return rep;
    }
    const IntMatrix c = matmul_blocked(st.b1, transpose(st.b2));
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < st.rows1.size(); ++i)
        for (std::size_t j = 0; j < st.rows2.size(); ++j)
            if (c(i, j) != 0 && alg3_pair_qualifies(g, st, i, j))
                total += c(i, j);
    // Each copy shows up once per choice of H (C(r,q)) times once per ordered
    // split of the remaining r-q vertices into the r1 row and r2 row.
    const std::uint64_t multiplicity = binomial(r, q) * binomial(r - q, st.r1);
    check_divisible(total, multiplicity, "count_alg3");
    rep.count = total / multiplicity;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

FindResult find_alg3(const Graph& g, std::size_t r, std::size_t q,
                     std::uint64_t entry_limit) {
    const Alg3State st = alg3_incidence(g, r, q, entry_limit);
    if (st.l.size() == 0) return {};
    const IntMatrix c = matmul_blocked(st.b1, transpose(st.b2));
    for (std::size_t i = 0; i < st.rows1.size(); ++i)
        for (std::size_t j = 0; j < st.rows2.size(); ++j) {
            if (c(i, j) == 0 || !alg3_pair_qualifies(g, st, i, j)) continue;
            for (std::size_t h = 0; h < st.l.size(); ++h) {
                if (st.b1(i, h) == 0 || st.b2(j, h) == 0) continue;
                auto verts = sorted_union(st.rows1[i], st.rows2[j]);
                return {sorted_union(st.l.copies[h], verts)};
            }
        }
    return {};
}

}  // namespace kclique
