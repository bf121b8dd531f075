#include "kclique/multidim.hpp"

#include <string>

namespace kclique {

namespace {

void validate_inputs(std::span<const IntMatrix> mats) {
    if (mats.size() < 2)
        throw std::invalid_argument("k-dimensional product needs k >= 2 matrices");
    const std::size_t n = mats[0].rows();
    for (const IntMatrix& m : mats) {
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("k-dimensional product: all matrices must be n x n");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (m(i, j) > 1)
                    throw std::invalid_argument("k-dimensional product: entries must be 0/1");
    }
}

// n^e with an overflow-safe cap check against the entry limit.
std::uint64_t checked_pow(std::size_t n, std::size_t e, std::uint64_t limit) {
    std::uint64_t v = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (n != 0 && v > limit / n)
            throw guard_error("tensor exceeds the configured entry limit");
        v *= n;
    }
    return v;
}

void check_tensor_size(std::size_t n, std::size_t k1, std::size_t k2,
                       std::uint64_t limit) {
    const std::uint64_t r = checked_pow(n, k1, limit);
    const std::uint64_t c = checked_pow(n, k2, limit);
    if (c != 0 && r > limit / c)
        throw guard_error("tensor exceeds the configured entry limit: n^" +
                          std::to_string(k1) + " x n^" + std::to_string(k2));
}

// One flattening block: rows indexed by tuples over the given matrices,
// big-endian in tuple position.
IntMatrix flatten_block(std::span<const IntMatrix> mats) {
    const std::size_t n = mats[0].rows();
    std::size_t rows = 1;
    for (std::size_t i = 0; i < mats.size(); ++i) rows *= n;
    IntMatrix out(rows, n);
    std::vector<std::size_t> tuple(mats.size(), 0);
    for (std::size_t row = 0; row < rows; ++row) {
        auto out_row = out.row(row);
        for (std::size_t l = 0; l < n; ++l) {
            std::uint64_t prod = 1;
            for (std::size_t j = 0; j < mats.size() && prod; ++j)
                prod &= mats[j](tuple[j], l);
            out_row[l] = prod;
        }
        // odometer increment, last position fastest
        for (std::size_t j = mats.size(); j-- > 0;) {
            if (++tuple[j] < n) break;
            tuple[j] = 0;
        }
    }
    return out;
}

}  // namespace

MultiDimProduct::MultiDimProduct(std::size_t k, std::size_t n, std::size_t k1,
                                 IntMatrix flat)
    : k_(k), n_(n), k1_(k1), flat_(std::move(flat)) {
    if (k < 2 || k1 < 1 || k1 >= k)
        throw std::invalid_argument("MultiDimProduct: invalid split");
}

std::size_t MultiDimProduct::row_index(std::span<const std::size_t> prefix) const {
    std::size_t idx = 0;
    for (std::size_t v : prefix) idx = idx * n_ + v;
    return idx;
}

std::size_t MultiDimProduct::col_index(std::span<const std::size_t> suffix) const {
    std::size_t idx = 0;
    for (std::size_t v : suffix) idx = idx * n_ + v;
    return idx;
}

std::uint64_t MultiDimProduct::entry(std::span<const std::size_t> tuple) const {
    if (tuple.size() != k_)
        throw std::invalid_argument("entry: tuple length must equal k");
    for (std::size_t v : tuple)
        if (v >= n_) throw std::invalid_argument("entry: index out of range");
    return flat_(row_index(tuple.subspan(0, k1_)), col_index(tuple.subspan(k1_)));
}

std::pair<IntMatrix, IntMatrix> flatten(std::span<const IntMatrix> mats,
                                        std::size_t k1) {
    validate_inputs(mats);
    if (k1 < 1 || k1 >= mats.size())
        throw std::invalid_argument("flatten: k1 must satisfy 1 <= k1 <= k-1");
    return {flatten_block(mats.subspan(0, k1)), flatten_block(mats.subspan(k1))};
}

MultiDimProduct kdim_product(std::span<const IntMatrix> mats, std::size_t k1,
                             std::uint64_t entry_limit) {
    validate_inputs(mats);
    if (k1 < 1 || k1 >= mats.size())
        throw std::invalid_argument("kdim_product: k1 must satisfy 1 <= k1 <= k-1");
    const std::size_t k = mats.size();
    const std::size_t n = mats[0].rows();
    check_tensor_size(n, k1, k - k1, entry_limit);
    auto [left, right] = flatten(mats, k1);
    return MultiDimProduct(k, n, k1, matmul_blocked(left, transpose(right)));
}

MultiDimProduct kdim_product_reference(std::span<const IntMatrix> mats,
                                       std::uint64_t entry_limit) {
    validate_inputs(mats);
    const std::size_t k = mats.size();
    const std::size_t n = mats[0].rows();
    const std::size_t k1 = (k + 1) / 2;
    check_tensor_size(n, k1, k - k1, entry_limit);
    std::size_t rows = 1, cols = 1;
    for (std::size_t i = 0; i < k1; ++i) rows *= n;
    for (std::size_t i = k1; i < k; ++i) cols *= n;
    IntMatrix flat(rows, cols);
    std::vector<std::size_t> tuple(k, 0);
    const std::size_t total = rows * cols;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::uint64_t sum = 0;
        for (std::size_t l = 0; l < n; ++l) {
            std::uint64_t prod = 1;
            for (std::size_t j = 0; j < k && prod; ++j)
                prod &= mats[j](tuple[j], l);
            sum += prod;
        }
        flat(idx / cols, idx % cols) = sum;
        for (std::size_t j = k; j-- > 0;) {
            if (++tuple[j] < n) break;
            tuple[j] = 0;
        }
    }
    return MultiDimProduct(k, n, k1, std::move(flat));
}

MultiDimProduct common_neighbors_tensor(const Graph& g, std::size_t k,
                                        std::size_t k1,
                                        std::uint64_t entry_limit) {
    if (k < 2)
        throw std::invalid_argument("common_neighbors_tensor: k must be >= 2");
    if (k1 == 0) k1 = (k + 1) / 2;
    std::vector<IntMatrix> mats(k, lift(g.adjacency()));
    return kdim_product(mats, k1, entry_limit);
}

std::optional<std::size_t> find_witness(std::span<const IntMatrix> mats,
                                        std::span<const std::size_t> tuple) {
    validate_inputs(mats);
    if (tuple.size() != mats.size())
        throw std::invalid_argument("find_witness: tuple length must equal k");
    const std::size_t n = mats[0].rows();
    for (std::size_t v : tuple)
        if (v >= n) throw std::invalid_argument("find_witness: index out of range");
    for (std::size_t l = 0; l < n; ++l) {
        bool all = true;
        for (std::size_t j = 0; j < mats.size(); ++j)
            if (mats[j](tuple[j], l) == 0) { all = false; break; }
        if (all) return l;
    }
    return std::nullopt;
}

}  // namespace kclique
