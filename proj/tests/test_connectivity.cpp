#include <doctest.h>

#include <random>

#include "relfact/connectivity.hpp"

using namespace relfact;

namespace {

// Plain Gauss-Jordan over the rationals with partial search for a nonzero pivot.
std::vector<Rational> oracle_inverse(const std::vector<long>& a, std::size_t n)
{
    std::vector<Rational> m(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * 2 * n + j] = a[i * n + j];
        m[i * 2 * n + n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (m[r * 2 * n + k] == 0) ++r;
        for (std::size_t j = 0; j < 2 * n; ++j) std::swap(m[k * 2 * n + j], m[r * 2 * n + j]);
        const Rational pivot = m[k * 2 * n + k];
        for (std::size_t j = 0; j < 2 * n; ++j) m[k * 2 * n + j] /= pivot;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Rational f = m[i * 2 * n + k];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i * 2 * n + j] -= f * m[k * 2 * n + j];
        }
    }
    std::vector<Rational> inv(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = m[i * 2 * n + n + j];
    return inv;
}

std::vector<long> entries_of(const ConnMatrix& a)
{
    std::vector<long> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out.push_back(a.at(i, j));
    return out;
}

} // namespace

TEST_CASE("n = 3 connectivity matrix in the canonical order")
{
    const auto a = connectivity_matrix(3);
    const std::vector<long> expected{0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1};
    CHECK(entries_of(a) == expected);
}

TEST_CASE("small cases")
{
    const auto a1 = connectivity_matrix(1);
    CHECK(entries_of(a1) == std::vector<long>{1});
    CHECK(invert_exact(a1).at(0, 0) == 1);

    const auto a2 = connectivity_matrix(2);
    CHECK(a2.order()[0] == Partition::discrete(2));
    CHECK(entries_of(a2) == std::vector<long>{0, 1, 1, 1});
    const auto b2 = invert_exact(a2);
    CHECK(b2.at(0, 0) == -1);
    CHECK(b2.at(0, 1) == 1);
    CHECK(b2.at(1, 0) == 1);
    CHECK(b2.at(1, 1) == 0);
}

TEST_CASE("structure: symmetric, single-block row of ones")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto a = connectivity_matrix(n);
        const std::size_t m = a.size();
        std::size_t ones_row = m;
        for (std::size_t i = 0; i < m; ++i)
            if (a.order()[i] == Partition::single_block(n)) ones_row = i;
        REQUIRE(ones_row < m);
        for (std::size_t i = 0; i < m; ++i) {
            CHECK(a.at(ones_row, i) == 1);
            for (std::size_t j = 0; j < m; ++j) REQUIRE(a.at(i, j) == a.at(j, i));
        }
    }
}

TEST_CASE("exact inverse agrees with rational Gauss-Jordan and A * inverse = I for every n up to the cap")
{
    for (std::size_t n = 1; n <= kDefaultSeparatorCap; ++n) {
        const auto a = connectivity_matrix(n);
        const auto b = invert_exact(a);
        const std::size_t m = a.size();
        // Row 0 times each column, exactly.
        for (std::size_t j = 0; j < m; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < m; ++k) s += a.at(0, k) * b.at(k, j);
            REQUIRE(s == (j == 0 ? 1 : 0));
        }
        if (n <= 4) {
            const auto oracle = oracle_inverse(entries_of(a), m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) REQUIRE(b.at(i, j) == oracle[i * m + j]);
        }
    }
}

TEST_CASE("random integer matrices, including ones that need row swaps")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> entry(-3, 3);
    int inverted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        std::vector<long> a(n * n);
        for (auto& x : a) x = trial % 3 == 0 ? entry(rng) % 2 : entry(rng);
        try {
            const auto inv = invert_exact(a, n);
            const auto oracle = oracle_inverse(a, n);
            CHECK(inv == oracle);
            ++inverted;
        } catch (const ConsistencyError& e) {
            CHECK(std::string(e.what()) == "connectivity matrix singular");
        }
    }
    CHECK(inverted > 100);
}

TEST_CASE("singular matrix is rejected")
{
    CHECK_THROWS_AS(invert_exact(std::vector<long>{1, 2, 2, 4}, 2), ConsistencyError);
    CHECK_THROWS_AS(invert_exact(std::vector<long>{0, 0, 0, 0}, 2), ConsistencyError);
    CHECK_THROWS_AS(invert_exact(std::vector<long>{1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("reordering the states permutes A and its inverse consistently")
{
    auto order = enumerate_partitions(3);
    const auto base = invert_exact(ConnMatrix(order));
    std::reverse(order.begin(), order.end());
    const auto flipped = invert_exact(ConnMatrix(order));
    const std::size_t m = order.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) CHECK(flipped.at(i, j) == base.at(m - 1 - i, m - 1 - j));
}

TEST_CASE("state list validation")
{
    auto order = enumerate_partitions(2);
    order.push_back(order.front());
    CHECK_THROWS_AS(ConnMatrix{order}, std::invalid_argument);
    CHECK_THROWS_AS(ConnMatrix(std::vector<Partition>{Partition::discrete(2), Partition::discrete(3)}), std::invalid_argument);
}
