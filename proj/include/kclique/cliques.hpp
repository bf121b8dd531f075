#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kclique/graph.hpp"
#include "kclique/multidim.hpp"

namespace kclique {

inline constexpr std::uint64_t kDefaultBruteforceSubsetLimit = 100000000;

// Result of one counting run, with the parameters that produced it.
struct CountReport {
    std::string algorithm;
    std::size_t r = 0;
    std::optional<std::size_t> q;
    std::optional<std::size_t> k1;
    std::uint64_t count = 0;
    double elapsed_ms = 0.0;
};

// A found K_r copy as a sorted vertex tuple, or nothing.
struct FindResult {
    std::optional<std::vector<std::size_t>> vertices;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Exhaustive r-subset scan; the independent oracle for every other counter.
// Refuses instances with more than subset_limit candidate subsets.
CountReport count_bruteforce(const Graph& g, std::size_t r,
                             std::uint64_t subset_limit = kDefaultBruteforceSubsetLimit);

// Triangle count via C = A x A summed over edges (each triangle meets 3 edges).
CountReport count_triangles_ir(const Graph& g);

// The classic reduction: split K_r into three near-equal parts, enumerate
// copies of each part, and count triangles in the auxiliary tripartite graph.
CountReport count_triangle_method(const Graph& g, std::size_t r,
                                  std::uint64_t entry_limit = kDefaultTensorEntryLimit);

// K_{r-1} listing plus the (r-1)-dimensional common-neighbors tensor;
// every copy is tallied r times. k1 = 0 picks the balanced split.
CountReport count_alg1(const Graph& g, std::size_t r, std::size_t k1 = 0,
                       std::uint64_t entry_limit = kDefaultTensorEntryLimit);
FindResult find_alg1(const Graph& g, std::size_t r,
                     std::uint64_t entry_limit = kDefaultTensorEntryLimit);

// K_{r-2} listing plus the extension incidence product C = B x B^T summed
// over edges; every copy is tallied C(r,2) times.
CountReport count_alg2(const Graph& g, std::size_t r,
                       std::uint64_t entry_limit = kDefaultTensorEntryLimit);
FindResult find_alg2(const Graph& g, std::size_t r,
                     std::uint64_t entry_limit = kDefaultTensorEntryLimit);

// K_q listing, extension sets split into near-equal halves of sizes
// r1 = ceil((r-q)/2) and r2 = floor((r-q)/2), and C = B1 x B2^T.
bool detect_alg3(const Graph& g, std::size_t r, std::size_t q,
                 std::uint64_t entry_limit = kDefaultTensorEntryLimit);
CountReport count_alg3(const Graph& g, std::size_t r, std::size_t q,
                       std::uint64_t entry_limit = kDefaultTensorEntryLimit);
FindResult find_alg3(const Graph& g, std::size_t r, std::size_t q,
                     std::uint64_t entry_limit = kDefaultTensorEntryLimit);

}  // namespace kclique
