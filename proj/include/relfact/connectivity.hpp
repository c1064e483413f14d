#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "relfact/partition.hpp"

namespace relfact {

using Rational = mpq_class;

/// Raised when a computation contradicts a structural guarantee, such as a
/// singular connectivity matrix.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 0/1 matrix over connectivity states: entry (i, j) is 1 iff order[i] and
/// order[j] form a connected pair.
class ConnMatrix {
public:
    explicit ConnMatrix(std::vector<Partition> order);

    std::size_t size() const { return order_.size(); }
    const std::vector<Partition>& order() const { return order_; }
    int at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

private:
    std::vector<Partition> order_;
    std::vector<std::uint8_t> entries_;
};

/// Exact inverse (b_ij) of a connectivity matrix, indexed by the same order.
class ConnMatrixInverse {
public:
    ConnMatrixInverse(std::vector<Partition> order, std::vector<Rational> entries);

    std::size_t size() const { return order_.size(); }
    const std::vector<Partition>& order() const { return order_; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * size() + j]; }

private:
    std::vector<Partition> order_;
    std::vector<Rational> entries_;
};

/// Connectivity matrix over enumerate_partitions(n, cap).
ConnMatrix connectivity_matrix(std::size_t n, std::size_t cap = kDefaultSeparatorCap);

/// Inverse of a square integer matrix (row-major) by fraction-free Gauss-Jordan
/// elimination. The result is checked against the input: A * inverse == I
/// exactly. Throws ConsistencyError when the matrix is singular.
std::vector<Rational> invert_exact(std::span<const long> entries, std::size_t n);

ConnMatrixInverse invert_exact(const ConnMatrix& a);

/// "p/q", or "p" for integers.
std::string to_string(const Rational& r);

} // namespace relfact
