#include "relfact/solver.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "relfact/union_find.hpp"

namespace relfact {

namespace {

using Key = std::vector<std::uint32_t>;

struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t v : key) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// q + p x
Polynomial edge_factor(double p)
{
    return Polynomial({1.0 - p, p});
}

std::vector<std::size_t> endpoint_index(const MultiGraph& g, bool second)
{
    std::vector<std::size_t> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.push_back(*g.node_index(second ? e.v : e.u));
    return out;
}

std::vector<std::size_t> terminal_index(const MultiGraph& g, const NodeSet& terminals)
{
    std::vector<std::size_t> out;
    out.reserve(terminals.size());
    for (NodeId k : terminals) out.push_back(*g.node_index(k));
    return out;
}

bool terminals_joined(DisjointSets& sets, const std::vector<std::size_t>& terminals)
{
    for (std::size_t i = 1; i < terminals.size(); ++i)
        if (!sets.same(terminals[0], terminals[i])) return false;
    return true;
}

class DeletionContraction {
public:
    explicit DeletionContraction(const SolverConfig& cfg) : cfg_(cfg) {}

    Polynomial solve(const MultiGraph& g, const NodeSet& k, long budget, std::size_t depth)
    {
        if (budget < 0) return {};
        if (depth > cfg_.recursion_depth_limit) throw std::runtime_error("recursion depth limit exceeded");

        DisjointSets sets(g.node_count());
        for (const Edge& e : g.edges()) sets.unite(*g.node_index(e.u), *g.node_index(e.v));
        const std::size_t root = sets.find(*g.node_index(k.front()));
        for (NodeId t : k) {
            if (sets.find(*g.node_index(t)) != root) return {};
        }

        // Loops and edges outside the terminals' component never affect
        // connectivity; each only contributes its energy factor q + p x.
        const auto cap = static_cast<std::size_t>(budget);
        Polynomial free = Polynomial::constant(1.0);
        std::vector<Edge> core;
        core.reserve(g.edge_count());
        for (const Edge& e : g.edges()) {
            if (e.is_loop() || sets.find(*g.node_index(e.u)) != root)
                free = mul_up_to(free, edge_factor(e.p), cap);
            else
                core.push_back(e);
        }
        if (k.size() <= 1) {
            for (const Edge& e : core) free = mul_up_to(free, edge_factor(e.p), cap);
            return free;
        }
        // Joining |K| distinct nodes needs at least |K| - 1 operative edges.
        if (k.size() - 1 > cap) return {};

        if (core.size() == g.edge_count()) return mul_up_to(free, branch(g, k, budget, depth), cap);

        std::vector<NodeId> nodes;
        for (NodeId n : g.nodes()) {
            if (sets.find(*g.node_index(n)) == root) nodes.push_back(n);
        }
        const MultiGraph h(std::move(nodes), std::move(core));
        return mul_up_to(free, branch(h, k, budget, depth), cap);
    }

private:
    // g is loop-free, connected, and holds at least two terminals.
    Polynomial branch(const MultiGraph& g, const NodeSet& k, long budget, std::size_t depth)
    {
        Key key;
        if (cfg_.memoization) {
            key.reserve(2 + k.size() + 3 * g.edge_count());
            key.push_back(static_cast<std::uint32_t>(budget));
            key.push_back(static_cast<std::uint32_t>(k.size()));
            for (NodeId t : k) key.push_back(raw(t));
            for (const Edge& e : g.edges()) {
                key.push_back(raw(e.id));
                key.push_back(raw(e.u));
                key.push_back(raw(e.v));
            }
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }

        const Edge pivot = choose_pivot(g, k);
        const Terminated contracted = contract(g, k, pivot.id);
        Polynomial result = pivot.p * mul_x(solve(contracted.graph, contracted.terminals, budget - 1, depth + 1));
        result += (1.0 - pivot.p) * solve(delete_edge(g, pivot.id), k, budget, depth + 1);

        if (cfg_.memoization) memo_.emplace(std::move(key), result);
        return result;
    }

    Edge choose_pivot(const MultiGraph& g, const NodeSet& k) const
    {
        if (cfg_.pivot == PivotRule::k_incident) {
            for (const Edge& e : g.edges()) {
                if (std::binary_search(k.begin(), k.end(), e.u) || std::binary_search(k.begin(), k.end(), e.v))
                    return e;
            }
        }
        return g.edges().front();
    }

    const SolverConfig& cfg_;
    std::unordered_map<Key, Polynomial, KeyHash> memo_;
};

Polynomial run(const ReliabilityInstance& inst, long budget, const SolverConfig& cfg)
{
    const MultiGraph& g = inst.graph();
    if (cfg.recursion_depth_limit < g.edge_count()) {
        throw std::invalid_argument("recursion depth limit " + std::to_string(cfg.recursion_depth_limit) +
                                    " is below the edge count " + std::to_string(g.edge_count()));
    }
    DeletionContraction dc(cfg);
    return dc.solve(g, inst.terminals(), budget, 0);
}

} // namespace

Polynomial brute_force_poly(const ReliabilityInstance& inst)
{
    const MultiGraph& g = inst.graph();
    const std::size_t m = g.edge_count();
    if (m > kBruteForceEdgeLimit) {
        throw std::invalid_argument("brute force refused for " + std::to_string(m) +
                                    " edges; use the deletion-contraction solver");
    }
    const auto us = endpoint_index(g, false);
    const auto vs = endpoint_index(g, true);
    const auto ks = terminal_index(g, inst.terminals());

    std::vector<double> coeffs(m + 1, 0.0);
    const std::uint64_t states = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < states; ++mask) {
        DisjointSets sets(g.node_count());
        double prob = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double p = g.edges()[i].p;
            if (mask >> i & 1u) {
                prob *= p;
                sets.unite(us[i], vs[i]);
            } else {
                prob *= 1.0 - p;
            }
        }
        if (terminals_joined(sets, ks)) coeffs[static_cast<std::size_t>(std::popcount(mask))] += prob;
    }
    return Polynomial(std::move(coeffs));
}

Polynomial reliability_poly(const ReliabilityInstance& inst, const SolverConfig& cfg)
{
    return run(inst, static_cast<long>(inst.graph().edge_count()), cfg);
}

TruncatedPoly truncated_poly(const ReliabilityInstance& inst, int bound, const SolverConfig& cfg)
{
    if (bound < 0) throw std::invalid_argument("energy bound must be nonnegative");
    return TruncatedPoly(bound, run(inst, bound, cfg));
}

TruncatedPoly truncated_poly(const ReliabilityInstance& inst, const SolverConfig& cfg)
{
    if (!inst.bound()) throw std::invalid_argument("instance has no energy bound");
    return truncated_poly(inst, *inst.bound(), cfg);
}

double constrained_reliability(const ReliabilityInstance& inst, const SolverConfig& cfg)
{
    return constrained_prob(truncated_poly(inst, cfg));
}

std::optional<std::size_t> threshold_energy(const ReliabilityInstance& inst, const SolverConfig& cfg)
{
    return reliability_poly(inst, cfg).min_degree();
}

Polynomial monte_carlo_poly(const ReliabilityInstance& inst, std::uint64_t samples, std::uint64_t seed)
{
    if (samples == 0) throw std::invalid_argument("Monte-Carlo needs at least one sample");
    const MultiGraph& g = inst.graph();
    const std::size_t m = g.edge_count();
    const auto us = endpoint_index(g, false);
    const auto vs = endpoint_index(g, true);
    const auto ks = terminal_index(g, inst.terminals());

    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> counts(m + 1, 0);
    for (std::uint64_t s = 0; s < samples; ++s) {
        DisjointSets sets(g.node_count());
        std::size_t operative = 0;
        for (std::size_t i = 0; i < m; ++i) {
            // 53-bit uniform in [0, 1); p = 1 always fires, p = 0 never does.
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < g.edges()[i].p) {
                ++operative;
                sets.unite(us[i], vs[i]);
            }
        }
        if (terminals_joined(sets, ks)) ++counts[operative];
    }

    std::vector<double> coeffs(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        coeffs[i] = static_cast<double>(counts[i]) / static_cast<double>(samples);
    return Polynomial(std::move(coeffs));
}

} // namespace relfact
