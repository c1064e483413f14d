#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace relfact {

/// Largest separator accepted by default. Bell(6) = 203 connectivity states.
inline constexpr std::size_t kDefaultSeparatorCap = 6;

/// A set partition of the separator positions {0, ..., n-1}; a connectivity state.
///
/// Stored as a restricted growth string: element i carries the index of its
/// block, and blocks are numbered in order of their minimum element. Two
/// partitions compare equal iff they have the same blocks.
class Partition {
public:
    Partition() = default;

    static Partition discrete(std::size_t n);
    static Partition single_block(std::size_t n);

    /// Validates that the blocks are nonempty, disjoint and cover 0..n-1.
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);

    /// Any labelling where equal labels mean "same block"; relabelled canonically.
    static Partition from_labels(std::span<const std::size_t> labels);

    std::size_t ground_size() const { return labels_.size(); }
    std::size_t block_count() const { return block_count_; }
    std::size_t block_of(std::size_t element) const { return labels_.at(element); }
    std::span<const std::uint8_t> labels() const { return labels_; }

    /// Blocks sorted by minimum element, elements ascending within each block.
    std::vector<std::vector<std::size_t>> blocks() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<std::uint8_t> labels_;
    std::size_t block_count_ = 0;
};

/// One-based block notation, e.g. "{1}{2,3}".
std::string to_string(const Partition& p);

/// All Bell(n) partitions of n elements, in canonical order: restricted growth
/// strings in decreasing lexicographic order. For n = 3 this is
/// {1}{2}{3}, {1}{2,3}, {1,3}{2}, {1,2}{3}, {1,2,3}.
///
/// Throws std::invalid_argument when n is 0 or larger than cap.
std::vector<Partition> enumerate_partitions(std::size_t n, std::size_t cap = kDefaultSeparatorCap);

/// Finest partition coarser than both arguments.
Partition join(const Partition& a, const Partition& b);

/// True iff the join of a and b is the single-block partition.
bool is_connected_pair(const Partition& a, const Partition& b);

} // namespace relfact
