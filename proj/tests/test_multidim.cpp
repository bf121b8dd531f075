#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "kclique/graph.hpp"
#include "kclique/multidim.hpp"

using namespace kclique;

namespace {

IntMatrix random_01(std::size_t n, SplitMix64& rng) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.bernoulli(0.5);
    return m;
}

IntMatrix all_ones(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = 1;
    return m;
}

bool same_tensor(const MultiDimProduct& a, const MultiDimProduct& b) {
    if (a.k() != b.k() || a.n() != b.n()) return false;
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

}  // namespace

TEST_CASE("flatten") {
    SplitMix64 rng(31);
    SUBCASE("k=2, k1=1 leaves both matrices unchanged") {
        const std::vector<IntMatrix> mats{random_01(5, rng), random_01(5, rng)};
        const auto [left, right] = flatten(mats, 1);
        CHECK(left == mats[0]);
        CHECK(right == mats[1]);
    }
    SUBCASE("all-ones inputs flatten to all-ones blocks") {
        const std::vector<IntMatrix> mats(3, all_ones(2));
        const auto [left, right] = flatten(mats, 2);
        CHECK(left.rows() == 4);
        CHECK(left.cols() == 2);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(left(i, j) == 1);
    }
    SUBCASE("rows are elementwise products of the input rows") {
        const std::vector<IntMatrix> mats{random_01(4, rng), random_01(4, rng),
                                          random_01(4, rng)};
        const auto [left, right] = flatten(mats, 1);
        CHECK(left == mats[0]);
        CHECK(right.rows() == 16);
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = 0; b < 4; ++b)
                for (std::size_t l = 0; l < 4; ++l)
                    CHECK(right(a * 4 + b, l) == mats[1](a, l) * mats[2](b, l));
    }
    SUBCASE("rejects bad input") {
        std::vector<IntMatrix> mats{IntMatrix(2, 2), IntMatrix(3, 3)};
        CHECK_THROWS_AS(flatten(mats, 1), std::invalid_argument);
        mats[1] = IntMatrix(2, 2);
        CHECK_THROWS_AS(flatten(mats, 0), std::invalid_argument);
        CHECK_THROWS_AS(flatten(mats, 2), std::invalid_argument);
        mats[0](0, 0) = 2;
        CHECK_THROWS_AS(flatten(mats, 1), std::invalid_argument);
    }
}

TEST_CASE("kdim_product agrees with the definitional reference") {
    SplitMix64 rng(101);
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::size_t n = 2; n <= 8; n += 2) {
            std::vector<IntMatrix> mats;
            for (std::size_t j = 0; j < k; ++j) mats.push_back(random_01(n, rng));
            const MultiDimProduct ref = kdim_product_reference(mats);
            for (std::size_t k1 = 1; k1 < k; ++k1)
                CHECK(same_tensor(kdim_product(mats, k1), ref));
        }
}

TEST_CASE("2-dimensional product is A1 x A2^T") {
    SplitMix64 rng(21);
    const std::vector<IntMatrix> mats{random_01(6, rng), random_01(6, rng)};
    const MultiDimProduct d = kdim_product(mats, 1);
    const IntMatrix expect = matmul_naive(mats[0], transpose(mats[1]));
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(d.entry({i, j}) == expect(i, j));
}

TEST_CASE("kdim_product_reference closed forms") {
    const std::vector<IntMatrix> zeros(3, IntMatrix(4, 4));
    const MultiDimProduct z = kdim_product_reference(zeros);
    CHECK(z.entry({0, 1, 2}) == 0);
    CHECK(z.entry({3, 3, 3}) == 0);

    for (std::size_t k : {2, 3, 4}) {
        const std::vector<IntMatrix> ones(k, all_ones(3));
        const MultiDimProduct d = kdim_product_reference(ones);
        const std::vector<std::size_t> tuple(k, 1);
        CHECK(d.entry(tuple) == 3);
    }
}

TEST_CASE("K4 tensor entry") {
    const std::vector<IntMatrix> mats(3, lift(complete_graph(4).adjacency()));
    CHECK(kdim_product(mats, 2).entry({0, 1, 2}) == 1);
}

TEST_CASE("permutation symmetry for identical symmetric inputs") {
    const Graph g = gen_gnp(6, 0.5, 77);
    const MultiDimProduct d = common_neighbors_tensor(g, 3);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            for (std::size_t c = 0; c < 6; ++c) {
                const std::uint64_t v = d.entry({a, b, c});
                CHECK(d.entry({a, c, b}) == v);
                CHECK(d.entry({b, a, c}) == v);
                CHECK(d.entry({c, b, a}) == v);
            }
}

TEST_CASE("common_neighbors_tensor") {
    CHECK(common_neighbors_tensor(complete_graph(4), 3).entry({0, 1, 2}) == 1);

    Graph c5(5);
    for (std::size_t i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(common_neighbors_tensor(c5, 2).entry({0, 2}) == 1);

    SUBCASE("every entry equals the direct intersection") {
        const Graph g = gen_gnp(12, 0.5, 4);
        const MultiDimProduct d = common_neighbors_tensor(g, 3);
        for (std::size_t a = 0; a < 12; ++a)
            for (std::size_t b = 0; b < 12; ++b)
                for (std::size_t c = 0; c < 12; ++c) {
                    const std::size_t tup[] = {a, b, c};
                    CHECK(d.entry(tup) == common_neighbor_count(g, tup));
                }
    }

    SUBCASE("range bound: at most n minus the distinct tuple vertices") {
        const Graph g = gen_gnp(10, 0.7, 9);
        const MultiDimProduct d = common_neighbors_tensor(g, 3);
        for (std::size_t a = 0; a < 10; ++a)
            for (std::size_t b = 0; b < 10; ++b)
                for (std::size_t c = 0; c < 10; ++c) {
                    std::vector<std::size_t> tup{a, b, c};
                    std::sort(tup.begin(), tup.end());
                    const std::size_t distinct =
                        std::unique(tup.begin(), tup.end()) - tup.begin();
                    CHECK(d.entry({a, b, c}) <= 10 - distinct);
                }
    }
}

TEST_CASE("memory guard") {
    const Graph g = gen_gnp(32, 0.5, 1);
    CHECK_THROWS_AS(common_neighbors_tensor(g, 4, 0, 1u << 16), guard_error);
    // raising the limit admits the same tensor
    CHECK(common_neighbors_tensor(g, 4, 0, std::uint64_t{1} << 21).k() == 4);
}

TEST_CASE("find_witness") {
    SplitMix64 rng(303);
    const std::vector<IntMatrix> ones(3, all_ones(4));
    CHECK(find_witness(ones, std::vector<std::size_t>{1, 2, 3}) == 0);

    const std::vector<IntMatrix> k4(3, lift(complete_graph(4).adjacency()));
    CHECK(find_witness(k4, std::vector<std::size_t>{0, 1, 2}) == 3);

    Graph c5(5);
    for (std::size_t i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    const std::vector<IntMatrix> c5m(3, lift(c5.adjacency()));
    CHECK_FALSE(find_witness(c5m, std::vector<std::size_t>{0, 1, 2}).has_value());

    SUBCASE("soundness: witness factors are 1, absence means a zero entry") {
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 2 + rng.next_below(6);
            const std::size_t k = 2 + rng.next_below(3);
            std::vector<IntMatrix> mats;
            for (std::size_t j = 0; j < k; ++j) mats.push_back(random_01(n, rng));
            std::vector<std::size_t> tuple(k);
            for (auto& v : tuple) v = rng.next_below(n);
            const auto w = find_witness(mats, tuple);
            const std::uint64_t entry =
                kdim_product_reference(mats).entry(tuple);
            if (w) {
                for (std::size_t j = 0; j < k; ++j)
                    CHECK(mats[j](tuple[j], *w) == 1);
            } else {
                CHECK(entry == 0);
            }
        }
    }
}
