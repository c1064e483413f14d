#include "relfact/partition.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "relfact/union_find.hpp"

namespace relfact {

namespace {

constexpr std::size_t kMaxGround = std::numeric_limits<std::uint8_t>::max();

} // namespace

Partition Partition::discrete(std::size_t n)
{
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = i;
    return from_labels(labels);
}

Partition Partition::single_block(std::size_t n)
{
    std::vector<std::size_t> labels(n, 0);
    return from_labels(labels);
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks)
{
    constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> labels(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("partition has an empty block");
        for (std::size_t e : blocks[b]) {
            if (e >= n) throw std::invalid_argument("partition element out of range");
            if (labels[e] != unset) throw std::invalid_argument("partition blocks overlap");
            labels[e] = b;
        }
    }
    if (std::find(labels.begin(), labels.end(), unset) != labels.end())
        throw std::invalid_argument("partition does not cover the ground set");
    return from_labels(labels);
}

Partition Partition::from_labels(std::span<const std::size_t> labels)
{
    if (labels.size() > kMaxGround) throw std::invalid_argument("partition ground set too large");
    Partition p;
    p.labels_.resize(labels.size());
    std::vector<std::pair<std::size_t, std::uint8_t>> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto it = std::find_if(seen.begin(), seen.end(),
                               [&](const auto& s) { return s.first == labels[i]; });
        if (it == seen.end()) {
            seen.emplace_back(labels[i], static_cast<std::uint8_t>(seen.size()));
            p.labels_[i] = seen.back().second;
        } else {
            p.labels_[i] = it->second;
        }
    }
    p.block_count_ = seen.size();
    return p;
}

std::vector<std::vector<std::size_t>> Partition::blocks() const
{
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) out[labels_[i]].push_back(i);
    return out;
}

std::string to_string(const Partition& p)
{
    std::string s;
    for (const auto& block : p.blocks()) {
        s += '{';
        for (std::size_t k = 0; k < block.size(); ++k) {
            if (k) s += ',';
            s += std::to_string(block[k] + 1);
        }
        s += '}';
    }
    return s;
}

std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t cap)
{
    if (n == 0) throw std::invalid_argument("separator must have at least one node");
    if (n > cap) {
        throw std::invalid_argument("separator too large: " + std::to_string(n) + " nodes, cap is " +
                                    std::to_string(cap));
    }

    // Restricted growth strings in increasing lexicographic order; a[i] <= 1 + max(a[0..i)).
    std::vector<Partition> out;
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    while (true) {
        out.push_back(Partition::from_labels(a));
        std::size_t i = n;
        while (i-- > 1) {
            if (a[i] <= prefix_max[i - 1]) break;
        }
        if (i == 0) break;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Partition join(const Partition& a, const Partition& b)
{
    if (a.ground_size() != b.ground_size()) throw std::invalid_argument("partitions over different ground sets");
    const std::size_t n = a.ground_size();
    DisjointSets sets(n);
    std::vector<std::size_t> first_a(a.block_count(), n);
    std::vector<std::size_t> first_b(b.block_count(), n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& fa = first_a[a.block_of(i)];
        if (fa == n) fa = i; else sets.unite(fa, i);
        auto& fb = first_b[b.block_of(i)];
        if (fb == n) fb = i; else sets.unite(fb, i);
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = sets.find(i);
    return Partition::from_labels(labels);
}

bool is_connected_pair(const Partition& a, const Partition& b)
{
    return join(a, b).block_count() == 1;
}

} // namespace relfact
