#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "relfact/graph.hpp"
#include "relfact/poly.hpp"

namespace relfact {

enum class PivotRule {
    k_incident,  ///< lowest edge id incident to a terminal, else lowest id
    lowest_id,
};

struct SolverConfig {
    PivotRule pivot = PivotRule::k_incident;
    /// Must be at least the edge count of the instance.
    std::size_t recursion_depth_limit = 1u << 16;
    /// Cache subproblems keyed by (edges, terminals, remaining budget).
    bool memoization = false;
};

/// Brute-force state enumeration is refused above this many edges.
inline constexpr std::size_t kBruteForceEdgeLimit = 25;

/// I_K(G) by enumerating all 2^|E| states. Throws std::invalid_argument above
/// kBruteForceEdgeLimit edges.
Polynomial brute_force_poly(const ReliabilityInstance& inst);

/// I_K(G) by deletion-contraction on a pivot edge:
///   I_K(G) = p x I_{K'}(G.e) + (1 - p) I_K(G - e).
Polynomial reliability_poly(const ReliabilityInstance& inst, const SolverConfig& cfg = {});

/// Representative of [I_K(G)] in R[x]/<x^(l+1)>. The contraction branch
/// carries bound l - 1 and any branch with a negative bound is zero.
TruncatedPoly truncated_poly(const ReliabilityInstance& inst, int bound, const SolverConfig& cfg = {});

/// Uses inst.bound(); throws std::invalid_argument if the instance has none.
TruncatedPoly truncated_poly(const ReliabilityInstance& inst, const SolverConfig& cfg = {});

/// P(state is a K-pathset with at most l operative edges), l = inst.bound().
double constrained_reliability(const ReliabilityInstance& inst, const SolverConfig& cfg = {});

/// Minimum operative edge count over all K-pathsets; none when K can never
/// be connected.
std::optional<std::size_t> threshold_energy(const ReliabilityInstance& inst, const SolverConfig& cfg = {});

/// Unbiased estimate of I_K(G): coefficient i is the fraction of sampled
/// states that are pathsets with exactly i operative edges. Deterministic in
/// (samples, seed). Throws std::invalid_argument when samples is 0.
Polynomial monte_carlo_poly(const ReliabilityInstance& inst, std::uint64_t samples, std::uint64_t seed);

} // namespace relfact
