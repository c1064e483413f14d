#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "relfact/partition.hpp"

using namespace relfact;

namespace {

// Bell numbers from the Bell triangle.
std::size_t bell(std::size_t n)
{
    std::vector<std::size_t> row{1};
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<std::size_t> next{row.back()};
        for (std::size_t x : row) next.push_back(next.back() + x);
        row = next;
    }
    return row.back();
}

// Set partitions by brute force: every labelling of n elements with labels
// in 0..n-1, reduced to its set of blocks.
std::set<std::set<std::set<std::size_t>>> brute_partitions(std::size_t n)
{
    std::set<std::set<std::set<std::size_t>>> out;
    std::vector<std::size_t> label(n, 0);
    while (true) {
        std::vector<std::set<std::size_t>> blocks(n);
        for (std::size_t i = 0; i < n; ++i) blocks[label[i]].insert(i);
        std::set<std::set<std::size_t>> p;
        for (auto& b : blocks)
            if (!b.empty()) p.insert(b);
        out.insert(p);
        std::size_t i = 0;
        while (i < n && ++label[i] == n) label[i++] = 0;
        if (i == n) break;
    }
    return out;
}

Partition blocks(std::size_t n, std::vector<std::vector<std::size_t>> b)
{
    return Partition::from_blocks(n, b);
}

} // namespace

TEST_CASE("enumeration sizes follow the Bell numbers")
{
    CHECK(enumerate_partitions(1).size() == 1);
    CHECK(enumerate_partitions(3).size() == 5);
    CHECK(enumerate_partitions(4).size() == 15);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_partitions(n).size() == bell(n));
}

TEST_CASE("enumeration matches brute force and has no duplicates")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto parts = enumerate_partitions(n);
        std::set<std::set<std::set<std::size_t>>> got;
        for (const auto& p : parts) {
            std::set<std::set<std::size_t>> s;
            for (const auto& b : p.blocks()) s.insert({b.begin(), b.end()});
            got.insert(s);
        }
        CHECK(got.size() == parts.size());
        CHECK(got == brute_partitions(n));
    }
}

TEST_CASE("n = 3 order starts discrete and ends with the single block")
{
    const auto parts = enumerate_partitions(3);
    std::vector<std::string> names;
    for (const auto& p : parts) names.push_back(to_string(p));
    CHECK(names == std::vector<std::string>{"{1}{2}{3}", "{1}{2,3}", "{1,3}{2}", "{1,2}{3}", "{1,2,3}"});
}

TEST_CASE("separator cap")
{
    CHECK_THROWS_AS(enumerate_partitions(7), std::invalid_argument);
    CHECK_THROWS_WITH(enumerate_partitions(7), doctest::Contains("separator too large"));
    CHECK(enumerate_partitions(7, 7).size() == 877);
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
}

TEST_CASE("from_blocks validation and canonical form")
{
    CHECK_THROWS_AS(blocks(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(blocks(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(blocks(3, {{0, 1, 2}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(blocks(3, {{0, 3}, {1, 2}}), std::invalid_argument);
    CHECK(blocks(3, {{2, 1}, {0}}) == blocks(3, {{0}, {1, 2}}));
    CHECK(blocks(3, {{2, 1}, {0}}).blocks() == std::vector<std::vector<std::size_t>>{{0}, {1, 2}});
}

TEST_CASE("join examples")
{
    const auto a = blocks(3, {{0}, {1, 2}});
    const auto b = blocks(3, {{0, 1}, {2}});
    CHECK(join(a, b) == Partition::single_block(3));
    CHECK(join(a, a) == a);
    CHECK(join(Partition::discrete(3), b) == b);
    CHECK_THROWS_AS(join(Partition::discrete(2), Partition::discrete(3)), std::invalid_argument);
}

TEST_CASE("join is a commutative, associative, idempotent operation with the discrete identity")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto parts = enumerate_partitions(n);
        const auto identity = Partition::discrete(n);
        for (const auto& p : parts) {
            CHECK(join(p, p) == p);
            CHECK(join(identity, p) == p);
            for (const auto& q : parts) {
                const auto pq = join(p, q);
                REQUIRE(pq == join(q, p));
                // pq is coarser than both.
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (p.block_of(i) == p.block_of(j) || q.block_of(i) == q.block_of(j))
                            REQUIRE(pq.block_of(i) == pq.block_of(j));
                if (n <= 4) {
                    for (const auto& r : parts) REQUIRE(join(join(p, q), r) == join(p, join(q, r)));
                }
            }
        }
    }
}

TEST_CASE("connected pairs")
{
    const auto a = blocks(3, {{0}, {1, 2}});
    const auto b = blocks(3, {{0, 2}, {1}});
    CHECK(is_connected_pair(a, b));
    CHECK_FALSE(is_connected_pair(Partition::discrete(3), Partition::discrete(3)));
    for (const auto& p : enumerate_partitions(4)) {
        CHECK(is_connected_pair(Partition::single_block(4), p));
        CHECK(is_connected_pair(p, Partition::single_block(4)));
    }
}
