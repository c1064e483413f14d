#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "relfact/connectivity.hpp"
#include "relfact/graph.hpp"
#include "relfact/partition.hpp"
#include "relfact/poly.hpp"
#include "relfact/solver.hpp"

namespace relfact {

/// G = G1 u G2 where the two parts share exactly the separator nodes, which
/// are terminals of both parts, and no edge.
struct Decomposition {
    ReliabilityInstance part1;
    ReliabilityInstance part2;
    std::vector<NodeId> separator;
};

enum class Validation {
    ok,
    /// Some terminal cannot reach the separator; the reliability is identically zero.
    zero_reliability,
};

/// Throws std::invalid_argument ("Hypothesis 1 violated: ...") when the parts
/// share an edge id, share a node outside the separator, miss a separator
/// node, or do not list every separator node as a terminal.
Validation validate(const Decomposition& d);

/// Splits inst by the components left after removing sep from the underlying
/// graph. Components are taken in order of their smallest node and assigned
/// to part1 while it holds at most half of the edges; edges joining two
/// separator nodes go to part1. Terminal sets are (K n V_i) u sep.
///
/// Throws std::invalid_argument("not a separator") when fewer than two
/// components remain.
Decomposition split_by_separator(const ReliabilityInstance& inst, std::vector<NodeId> sep);

/// G1 u G2 with terminal set K1 u K2.
ReliabilityInstance merge(const Decomposition& d);

struct FactorizeOptions {
    /// Worker threads for the per-part solver jobs.
    std::size_t jobs = 1;
    SolverConfig solver{};
    std::size_t max_separator = kDefaultSeparatorCap;
    /// Base order of the connectivity states; a permutation of
    /// enumerate_partitions(n). Canonical order when empty.
    std::optional<std::vector<Partition>> order;
};

/// I_K(G) = sum_ij b_ij I(G1^{A_i}) I(G2^{A_j}), (b_ij) the inverse of the
/// connectivity matrix over the states A_1..A_m.
Polynomial factorize(const Decomposition& d, const FactorizeOptions& opts = {});

/// Same identity in R[x]/<x^(bound+1)>: every part polynomial and every
/// product is taken modulo x^(bound+1).
TruncatedPoly factorize(const Decomposition& d, int bound, const FactorizeOptions& opts = {});

/// The 2m part polynomials I(G1^{A_i}) and I(G2^{A_j}), computed on up to
/// `jobs` threads. Exposed so callers can recombine them differently.
struct PartPolynomials {
    std::vector<Partition> order;
    std::vector<Polynomial> side1;
    std::vector<Polynomial> side2;
};

PartPolynomials part_polynomials(const Decomposition& d, std::optional<int> bound, const FactorizeOptions& opts);

} // namespace relfact
