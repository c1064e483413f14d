#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "relfact/partition.hpp"

namespace relfact {

enum class NodeId : std::uint32_t {};
enum class EdgeId : std::uint32_t {};

constexpr std::uint32_t raw(NodeId n) { return static_cast<std::uint32_t>(n); }
constexpr std::uint32_t raw(EdgeId e) { return static_cast<std::uint32_t>(e); }

/// Undirected edge with operation probability p. Endpoints are stored with
/// u <= v; u == v is a self-loop.
struct Edge {
    NodeId u;
    NodeId v;
    EdgeId id;
    double p;

    bool is_loop() const { return u == v; }
    bool touches(NodeId n) const { return u == n || v == n; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free node list.
using NodeSet = std::vector<NodeId>;

NodeSet make_node_set(std::vector<NodeId> nodes);

/// Immutable stochastic multigraph. Edge ids are unique, edges are kept sorted
/// by id, and every endpoint is a node of the graph.
class MultiGraph {
public:
    MultiGraph() = default;

    /// Throws std::invalid_argument on a duplicate edge id, a dangling
    /// endpoint or a probability outside [0, 1].
    MultiGraph(std::vector<NodeId> nodes, std::vector<Edge> edges);

    std::span<const NodeId> nodes() const { return nodes_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_node(NodeId n) const;
    /// Position of n in nodes(), if present.
    std::optional<std::size_t> node_index(NodeId n) const;

    const Edge* find_edge(EdgeId id) const;
    /// Throws std::out_of_range("no such edge") when absent.
    const Edge& edge(EdgeId id) const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;

private:
    struct Trusted {};
    MultiGraph(Trusted, std::vector<NodeId> nodes, std::vector<Edge> edges)
        : nodes_(std::move(nodes)), edges_(std::move(edges)) {}

    friend struct GraphAccess;

    std::vector<NodeId> nodes_;
    std::vector<Edge> edges_;
};

/// A graph together with its distinguished terminal set.
struct Terminated {
    MultiGraph graph;
    NodeSet terminals;
};

/// Set of operative edge ids.
struct State {
    std::vector<EdgeId> operative;

    std::size_t size() const { return operative.size(); }
};

/// Graph, nonempty terminal set K and optional energy bound l.
class ReliabilityInstance {
public:
    /// Throws std::invalid_argument when K is empty, K is not a subset of the
    /// nodes or the bound is negative.
    ReliabilityInstance(MultiGraph graph, std::vector<NodeId> terminals, std::optional<int> bound = std::nullopt);

    const MultiGraph& graph() const { return graph_; }
    const NodeSet& terminals() const { return terminals_; }
    std::optional<int> bound() const { return bound_; }

    ReliabilityInstance with_bound(std::optional<int> bound) const;

private:
    MultiGraph graph_;
    NodeSet terminals_;
    std::optional<int> bound_;
};

/// G.e: merges the endpoints of e into the smaller of the two ids and removes
/// e. Parallel edges between the endpoints become self-loops. Returns the
/// projected terminal set as well.
Terminated contract(const MultiGraph& g, const NodeSet& terminals, EdgeId e);

/// G - e: same nodes, edge e removed.
MultiGraph delete_edge(const MultiGraph& g, EdgeId e);

/// G^A: merges the separator nodes block by block according to part (element
/// i of part is sep[i]); each block becomes its smallest node id. No edge is
/// removed.
Terminated identify(const MultiGraph& g, const NodeSet& terminals, std::span<const NodeId> sep,
                    const Partition& part);

/// True iff every terminal lies in one component of the operative subgraph.
bool is_pathset(const MultiGraph& g, const NodeSet& terminals, const State& s);

/// True iff every terminal of K1 and K2 reaches some separator node in the
/// underlying graph G1 u G2.
bool check_hypothesis2(const MultiGraph& g1, const NodeSet& k1, const MultiGraph& g2, const NodeSet& k2,
                       std::span<const NodeId> sep);

} // namespace relfact
