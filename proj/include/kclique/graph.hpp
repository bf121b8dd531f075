#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kclique/matrix.hpp"

namespace kclique {

// SplitMix64: state advances by the golden-ratio constant, output is a
// finalizing mix. state += 0x9E3779B97F4A7C15; z = state;
// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
// z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
// Portable and reproducible from a 64-bit seed across platforms/languages.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // Bernoulli trial with probability p, using the top 53 bits.
    bool bernoulli(double p) {
        return (next() >> 11) < static_cast<std::uint64_t>(p * 9007199254740992.0);
    }

private:
    std::uint64_t state_;
};

// Simple undirected graph as a symmetric zero-diagonal bit adjacency matrix.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(std::size_t n) : n_(n), adj_(n, n) {}

    std::size_t n() const { return n_; }
    const BoolMatrix& adjacency() const { return adj_; }

    bool adjacent(std::size_t u, std::size_t v) const { return adj_.get(u, v); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u >= n_ || v >= n_)
            throw std::invalid_argument("add_edge: vertex index out of range");
        if (u == v)
            throw std::invalid_argument("add_edge: self-loops are not allowed");
        adj_.set(u, v, true);
        adj_.set(v, u, true);
    }

    std::span<const std::uint64_t> neighbor_words(std::size_t v) const {
        return adj_.row_words(v);
    }

    std::size_t degree(std::size_t v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_;
    BoolMatrix adj_;
};

// All K_t copies of a graph, each as a strictly increasing vertex tuple,
// listed in lexicographic order.
struct CliqueList {
    std::size_t t = 0;
    std::vector<std::vector<std::size_t>> copies;

    std::size_t size() const { return copies.size(); }
};

// Generators. All draws come from SplitMix64 so instances are reproducible.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);
std::pair<Graph, std::vector<std::size_t>> gen_planted(std::size_t n, double p,
                                                       std::size_t r,
                                                       std::uint64_t seed);
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

// Edge-list wire format: "n m\n" then m lines "u v" with 0 <= u < v < n,
// LF endings, edges emitted in lexicographic order.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// DIMACS: "c" comment lines, one "p edge n m" header, m "e u v" lines,
// 1-based vertex indices on the wire.
Graph parse_dimacs(std::string_view text);

// Auto-detects DIMACS ("c"/"p" lines) vs the edge-list format.
Graph parse_graph(std::string_view text);

// All K_t copies via ordered backtracking over common neighborhoods.
CliqueList enumerate_cliques(const Graph& g, std::size_t t);

// S(H): vertices adjacent to every vertex of the clique H. Rejects non-clique H.
std::vector<std::size_t> extension_set(const Graph& g,
                                       std::span<const std::size_t> h);

bool is_clique(const Graph& g, std::span<const std::size_t> s);

// |N(v1) ∩ ... ∩ N(vk)| by direct bitset intersection.
std::size_t common_neighbor_count(const Graph& g,
                                  std::span<const std::size_t> tuple);

// A×A for the adjacency matrix A; entry [i,j] counts common neighbors of i, j.
IntMatrix two_path_counts(const Graph& g);

}  // namespace kclique
