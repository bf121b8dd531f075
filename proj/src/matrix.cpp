#include "kclique/matrix.hpp"

#include <algorithm>

namespace kclique {

namespace {

void check_dims(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols() != y.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
}

}  // namespace

IntMatrix matmul_naive(const IntMatrix& x, const IntMatrix& y) {
    check_dims(x, y);
    IntMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            std::uint64_t acc = 0;
            for (std::size_t l = 0; l < x.cols(); ++l) {
                const std::uint64_t before = acc;
                acc += x(i, l) * y(l, j);
                assert(acc >= before && "integer matmul overflowed");
                (void)before;
            }
            out(i, j) = acc;
        }
    return out;
}

IntMatrix matmul_blocked(const IntMatrix& x, const IntMatrix& y,
                         std::size_t tile) {
    check_dims(x, y);
    if (tile == 0) throw std::invalid_argument("matmul_blocked: tile must be >= 1");
    IntMatrix out(x.rows(), y.cols());
    const std::size_t n = x.rows(), k = x.cols(), m = y.cols();
    for (std::size_t ii = 0; ii < n; ii += tile)
        for (std::size_t ll = 0; ll < k; ll += tile)
            for (std::size_t jj = 0; jj < m; jj += tile) {
                const std::size_t ie = std::min(ii + tile, n);
                const std::size_t le = std::min(ll + tile, k);
                const std::size_t je = std::min(jj + tile, m);
                for (std::size_t i = ii; i < ie; ++i) {
                    auto out_row = out.row(i);
                    for (std::size_t l = ll; l < le; ++l) {
                        const std::uint64_t a = x(i, l);
                        if (a == 0) continue;
                        auto y_row = y.row(l);
                        for (std::size_t j = jj; j < je; ++j)
                            out_row[j] += a * y_row[j];
                    }
                }
            }
    return out;
}

BoolMatrix bool_matmul(const BoolMatrix& x, const BoolMatrix& y) {
    if (x.cols() != y.rows())
        throw std::invalid_argument("bool_matmul: inner dimensions disagree");
    BoolMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i) {
        auto out_row = out.row_words(i);
        for (std::size_t l = 0; l < x.cols(); ++l) {
            if (!x.get(i, l)) continue;
            auto y_row = y.row_words(l);
            for (std::size_t w = 0; w < out_row.size(); ++w)
                out_row[w] |= y_row[w];
        }
    }
    return out;
}

IntMatrix transpose(const IntMatrix& x) {
    IntMatrix out(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(j, i) = x(i, j);
    return out;
}

BoolMatrix transpose(const BoolMatrix& x) {
    BoolMatrix out(x.cols(), x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            if (x.get(i, j)) out.set(j, i, true);
    return out;
}

std::uint64_t trace(const IntMatrix& x) {
    if (x.rows() != x.cols())
        throw std::invalid_argument("trace: matrix is not square");
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) s += x(i, i);
    return s;
}

IntMatrix lift(const BoolMatrix& x) {
    IntMatrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            out(i, j) = x.get(i, j) ? 1 : 0;
    return out;
}

}  // namespace kclique
