#include "relfact/connectivity.hpp"

#include <algorithm>
#include <utility>

namespace relfact {

ConnMatrix::ConnMatrix(std::vector<Partition> order) : order_(std::move(order))
{
    if (order_.empty()) throw std::invalid_argument("connectivity matrix needs at least one state");
    const std::size_t ground = order_.front().ground_size();
    for (const auto& p : order_) {
        if (p.ground_size() != ground) throw std::invalid_argument("connectivity states over different ground sets");
    }
    auto sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("connectivity state listed twice");

    const std::size_t m = order_.size();
    entries_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            const auto connected = static_cast<std::uint8_t>(is_connected_pair(order_[i], order_[j]));
            entries_[i * m + j] = connected;
            entries_[j * m + i] = connected;
        }
    }
}

ConnMatrixInverse::ConnMatrixInverse(std::vector<Partition> order, std::vector<Rational> entries)
    : order_(std::move(order)), entries_(std::move(entries))
{
    if (entries_.size() != order_.size() * order_.size())
        throw std::invalid_argument("inverse entries do not match the state count");
}

ConnMatrix connectivity_matrix(std::size_t n, std::size_t cap)
{
    return ConnMatrix(enumerate_partitions(n, cap));
}

std::vector<Rational> invert_exact(std::span<const long> entries, std::size_t n)
{
    if (n == 0 || entries.size() != n * n) throw std::invalid_argument("matrix must be square and nonempty");

    // Augmented [A | I]. After step k every row holds integer minors of A, so
    // each division by the previous pivot is exact (Bareiss).
    const std::size_t width = 2 * n;
    std::vector<mpz_class> m(n * width);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * width + j] = entries[i * n + j];
        m[i * width + n + i] = 1;
    }
    auto cell = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * width + j]; };

    mpz_class previous = 1;
    mpz_class t;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && cell(pivot, k) == 0) ++pivot;
        if (pivot == n) throw ConsistencyError("connectivity matrix singular");
        if (pivot != k) {
            for (std::size_t j = 0; j < width; ++j) std::swap(cell(k, j), cell(pivot, j));
        }
        const mpz_class& diag = cell(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const mpz_class factor = cell(i, k);
            for (std::size_t j = 0; j < width; ++j) {
                if (j == k) continue;
                t = diag * cell(i, j) - factor * cell(k, j);
                if (!mpz_divisible_p(t.get_mpz_t(), previous.get_mpz_t()))
                    throw ConsistencyError("inexact division during fraction-free elimination");
                mpz_divexact(cell(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
            }
            cell(i, k) = 0;
        }
        previous = diag;
    }

    std::vector<Rational> inverse(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational& r = inverse[i * n + j];
            r = Rational(cell(i, n + j), cell(i, i));
            r.canonicalize();
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (entries[i * n + k] != 0) sum += entries[i * n + k] * inverse[k * n + j];
            }
            if (sum != (i == j ? 1 : 0)) throw ConsistencyError("exact inverse check failed");
        }
    }
    return inverse;
}

ConnMatrixInverse invert_exact(const ConnMatrix& a)
{
    const std::size_t n = a.size();
    std::vector<long> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = a.at(i, j);
    return ConnMatrixInverse(a.order(), invert_exact(entries, n));
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

} // namespace relfact
