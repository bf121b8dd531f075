#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kclique/graph.hpp"
#include "kclique/matrix.hpp"

namespace kclique {

// Refuse flattened tensors above this many entries (~1 GiB at 8 bytes each)
// unless the caller raises the limit.
inline constexpr std::uint64_t kDefaultTensorEntryLimit = std::uint64_t{1} << 27;

// The k-dimensional product D[i1..ik] = sum_l prod_j mats_j[i_j, l] of k
// n x n matrices, stored as its n^k1 x n^k2 flattening. The row block holds
// the first k1 tuple positions, the column block the rest, both big-endian
// in tuple position.
class MultiDimProduct {
public:
    MultiDimProduct(std::size_t k, std::size_t n, std::size_t k1, IntMatrix flat);

    std::size_t k() const { return k_; }
    std::size_t n() const { return n_; }
    std::size_t k1() const { return k1_; }
    std::size_t k2() const { return k_ - k1_; }
    const IntMatrix& flat() const { return flat_; }

    std::size_t row_index(std::span<const std::size_t> prefix) const;
    std::size_t col_index(std::span<const std::size_t> suffix) const;

    // D[t] for a full k-tuple of indices in [0, n).
    std::uint64_t entry(std::span<const std::size_t> tuple) const;
    std::uint64_t entry(std::initializer_list<std::size_t> tuple) const {
        return entry(std::span<const std::size_t>(tuple.begin(), tuple.size()));
    }

private:
    std::size_t k_, n_, k1_;
    IntMatrix flat_;
};

// Lemma 1 flattening: left[i1..ik1, l] = prod_{j<=k1} mats_j[i_j, l] and the
// analogous right block for the remaining k2 matrices.
std::pair<IntMatrix, IntMatrix> flatten(std::span<const IntMatrix> mats,
                                        std::size_t k1);

// k-dimensional product via one rectangular multiplication of the flattening
// blocks (left times right transposed).
MultiDimProduct kdim_product(std::span<const IntMatrix> mats, std::size_t k1,
                             std::uint64_t entry_limit = kDefaultTensorEntryLimit);

// Definitional evaluation in Theta(n^{k+1}) scalar work; the oracle for
// kdim_product. Stored with the balanced split k1 = ceil(k/2).
MultiDimProduct kdim_product_reference(
    std::span<const IntMatrix> mats,
    std::uint64_t entry_limit = kDefaultTensorEntryLimit);

// Product of k copies of G's adjacency matrix; entry(t) is the number of
// vertices adjacent to every vertex of the tuple t. k1 = 0 means the
// balanced default ceil(k/2).
MultiDimProduct common_neighbors_tensor(
    const Graph& g, std::size_t k, std::size_t k1 = 0,
    std::uint64_t entry_limit = kDefaultTensorEntryLimit);

// Smallest l with prod_j mats_j[tuple_j, l] = 1, or nullopt if the
// corresponding product entry is zero.
std::optional<std::size_t> find_witness(std::span<const IntMatrix> mats,
                                        std::span<const std::size_t> tuple);

}  // namespace kclique
