#include "kclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace kclique {

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::uint64_t w : neighbor_words(v)) d += std::popcount(w);
    return d;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::size_t v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_gnp: probability out of [0,1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

std::pair<Graph, std::vector<std::size_t>> gen_planted(std::size_t n, double p,
                                                       std::size_t r,
                                                       std::uint64_t seed) {
    if (r > n) throw std::invalid_argument("gen_planted: r exceeds n");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("gen_planted: probability out of [0,1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    // Partial Fisher-Yates picks the planted vertex set.
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t j = i + rng.next_below(n - i);
        std::swap(perm[i], perm[j]);
    }
    std::vector<std::size_t> planted(perm.begin(), perm.begin() + r);
    std::sort(planted.begin(), planted.end());
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            if (!g.adjacent(planted[a], planted[b]))
                g.add_edge(planted[a], planted[b]);
    return {std::move(g), std::move(planted)};
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

namespace {

std::size_t parse_count(std::string_view tok, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument(std::string("parse: bad ") + what + " '" +
                                    std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw std::invalid_argument("edge list: missing header");
    auto header = split_ws(lines[0]);
    if (header.size() != 2)
        throw std::invalid_argument("edge list: header must be 'n m'");
    const std::size_t n = parse_count(header[0], "vertex count");
    const std::size_t m = parse_count(header[1], "edge count");
    if (lines.size() - 1 != m)
        throw std::invalid_argument("edge list: edge line count disagrees with header");
    Graph g(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto toks = split_ws(lines[k]);
        if (toks.size() != 2)
            throw std::invalid_argument("edge list: edge line must be 'u v'");
        const std::size_t u = parse_count(toks[0], "vertex");
        const std::size_t v = parse_count(toks[1], "vertex");
        if (u >= n || v >= n)
            throw std::invalid_argument("edge list: vertex index out of range");
        if (u == v)
            throw std::invalid_argument("edge list: self-loop rejected");
        g.add_edge(u, v);  // duplicates are idempotent
    }
    return g;
}

std::string emit_edge_list(const Graph& g) {
    const auto es = g.edges();
    std::ostringstream out;
    out << g.n() << ' ' << es.size() << '\n';
    for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_dimacs(std::string_view text) {
    auto lines = split_lines(text);
    bool seen_header = false;
    std::size_t n = 0, m = 0, edges_seen = 0;
    Graph g;
    for (auto line : lines) {
        auto toks = split_ws(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (seen_header || toks.size() != 4 || toks[1] != "edge")
                throw std::invalid_argument("dimacs: malformed 'p edge n m' header");
            n = parse_count(toks[2], "vertex count");
            m = parse_count(toks[3], "edge count");
            g = Graph(n);
            seen_header = true;
        } else if (toks[0] == "e") {
            if (!seen_header)
                throw std::invalid_argument("dimacs: edge before header");
            if (toks.size() != 3)
                throw std::invalid_argument("dimacs: edge line must be 'e u v'");
            const std::size_t u = parse_count(toks[1], "vertex");
            const std::size_t v = parse_count(toks[2], "vertex");
            if (u < 1 || v < 1 || u > n || v > n)
                throw std::invalid_argument("dimacs: vertex index out of range");
            if (u == v)
                throw std::invalid_argument("dimacs: self-loop rejected");
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
        } else {
            throw std::invalid_argument("dimacs: unrecognized line '" +
                                        std::string(line) + "'");
        }
    }
    if (!seen_header) throw std::invalid_argument("dimacs: missing header");
    if (edges_seen != m)
        throw std::invalid_argument("dimacs: edge line count disagrees with header");
    return g;
}

Graph parse_graph(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == 'c' || c == 'p') return parse_dimacs(text);
        break;
    }
    return parse_edge_list(text);
}

namespace {

void clique_backtrack(const Graph& g, std::size_t t,
                      std::vector<std::size_t>& current,
                      std::vector<std::uint64_t>& cand,
                      std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == t) {
        out.push_back(current);
        return;
    }
    const std::size_t first =
        current.empty() ? 0 : current.back() + 1;
    for (std::size_t v = first; v < g.n(); ++v) {
        if (!current.empty() && !((cand[v / 64] >> (v % 64)) & 1u)) continue;
        std::vector<std::uint64_t> next_cand(cand.size());
        auto nb = g.neighbor_words(v);
        if (current.empty()) {
            for (std::size_t w = 0; w < next_cand.size(); ++w) next_cand[w] = nb[w];
        } else {
            for (std::size_t w = 0; w < next_cand.size(); ++w)
                next_cand[w] = cand[w] & nb[w];
        }
        current.push_back(v);
        clique_backtrack(g, t, current, next_cand, out);
        current.pop_back();
    }
}

}  // namespace

CliqueList enumerate_cliques(const Graph& g, std::size_t t) {
    if (t == 0) throw std::invalid_argument("enumerate_cliques: t must be >= 1");
    CliqueList list;
    list.t = t;
    const std::size_t words = (g.n() + 63) / 64;
    std::vector<std::uint64_t> cand(words, ~std::uint64_t{0});
    std::vector<std::size_t> current;
    current.reserve(t);
    clique_backtrack(g, t, current, cand, list.copies);
    return list;
}

bool is_clique(const Graph& g, std::span<const std::size_t> s) {
    for (std::size_t v : s)
        if (v >= g.n()) throw std::invalid_argument("is_clique: vertex out of range");
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b] || !g.adjacent(s[a], s[b])) return false;
    return true;
}

std::vector<std::size_t> extension_set(const Graph& g,
                                       std::span<const std::size_t> h) {
    if (!is_clique(g, h))
        throw std::invalid_argument("extension_set: H does not induce a clique");
    const std::size_t words = (g.n() + 63) / 64;
    std::vector<std::uint64_t> common(words, ~std::uint64_t{0});
    for (std::size_t v : h) {
        auto nb = g.neighbor_words(v);
        for (std::size_t w = 0; w < words; ++w) common[w] &= nb[w];
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < g.n(); ++v)
        if ((common[v / 64] >> (v % 64)) & 1u) out.push_back(v);
    return out;
}

std::size_t common_neighbor_count(const Graph& g,
                                  std::span<const std::size_t> tuple) {
    const std::size_t words = (g.n() + 63) / 64;
    std::vector<std::uint64_t> common(words, ~std::uint64_t{0});
    // Mask the padding bits past column n before popcounting.
    if (g.n() % 64 != 0 && words > 0)
        common[words - 1] = (std::uint64_t{1} << (g.n() % 64)) - 1;
    for (std::size_t v : tuple) {
        if (v >= g.n())
            throw std::invalid_argument("common_neighbor_count: vertex out of range");
        auto nb = g.neighbor_words(v);
        for (std::size_t w = 0; w < words; ++w) common[w] &= nb[w];
    }
    std::size_t count = 0;
    for (std::uint64_t w : common) count += std::popcount(w);
    return count;
}

IntMatrix two_path_counts(const Graph& g) {
    const IntMatrix a = lift(g.adjacency());
    return matmul_naive(a, a);
}

}  // namespace kclique
