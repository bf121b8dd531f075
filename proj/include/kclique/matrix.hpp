#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace kclique {

// Thrown when a computation would exceed a configured memory or work limit.
class guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense row-major matrix of 64-bit unsigned integers. All arithmetic in this
// library is exact; there is no floating point anywhere in the core.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    std::uint64_t operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<std::uint64_t> row(std::size_t i) {
        return {data_.data() + i * cols_, cols_};
    }

    const std::vector<std::uint64_t>& data() const { return data_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> data_;
};

// Bit-packed row-major Boolean matrix. Each row occupies a whole number of
// 64-bit words; padding bits past the last column are kept zero.
class BoolMatrix {
public:
    BoolMatrix() : rows_(0), cols_(0), words_per_row_(0) {}
    BoolMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols),
          words_per_row_((cols + 63) / 64),
          bits_(rows * words_per_row_, 0) {}

    static BoolMatrix identity(std::size_t n) {
        BoolMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    bool get(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        assert(i < rows_ && j < cols_);
        std::uint64_t& w = bits_[i * words_per_row_ + j / 64];
        const std::uint64_t mask = std::uint64_t{1} << (j % 64);
        if (v) w |= mask; else w &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {bits_.data() + i * words_per_row_, words_per_row_};
    }
    std::span<std::uint64_t> row_words(std::size_t i) {
        return {bits_.data() + i * words_per_row_, words_per_row_};
    }

    friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> bits_;
};

// Exact product, reference backend. Throws std::invalid_argument on a
// dimension mismatch. The caller guarantees entries stay below 2^64.
IntMatrix matmul_naive(const IntMatrix& x, const IntMatrix& y);

// Cache-blocked product; bit-identical to matmul_naive for every input.
IntMatrix matmul_blocked(const IntMatrix& x, const IntMatrix& y,
                         std::size_t tile = 64);

// Boolean product: result[i,j] = OR_l (x[i,l] AND y[l,j]).
BoolMatrix bool_matmul(const BoolMatrix& x, const BoolMatrix& y);

IntMatrix transpose(const IntMatrix& x);
BoolMatrix transpose(const BoolMatrix& x);

// Sum of the diagonal; rejects non-square input.
std::uint64_t trace(const IntMatrix& x);

// 0/1 integer copy of a Boolean matrix.
IntMatrix lift(const BoolMatrix& x);

}  // namespace kclique
