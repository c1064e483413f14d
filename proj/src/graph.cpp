#include "relfact/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "relfact/union_find.hpp"

namespace relfact {

struct GraphAccess {
    static MultiGraph make(std::vector<NodeId> nodes, std::vector<Edge> edges)
    {
        return MultiGraph(MultiGraph::Trusted{}, std::move(nodes), std::move(edges));
    }
};

namespace {

Edge reattach(const Edge& e, NodeId a, NodeId b)
{
    return Edge{std::min(a, b), std::max(a, b), e.id, e.p};
}

NodeSet project(const NodeSet& nodes, auto&& pi)
{
    NodeSet out;
    out.reserve(nodes.size());
    for (NodeId n : nodes) out.push_back(pi(n));
    return make_node_set(std::move(out));
}

} // namespace

NodeSet make_node_set(std::vector<NodeId> nodes)
{
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

MultiGraph::MultiGraph(std::vector<NodeId> nodes, std::vector<Edge> edges)
    : nodes_(make_node_set(std::move(nodes))), edges_(std::move(edges))
{
    for (Edge& e : edges_) {
        if (!(e.p >= 0.0 && e.p <= 1.0))
            throw std::invalid_argument("edge id=" + std::to_string(raw(e.id)) + " has probability outside [0,1]");
        if (!has_node(e.u) || !has_node(e.v))
            throw std::invalid_argument("edge id=" + std::to_string(raw(e.id)) + " has an undeclared endpoint");
        if (e.v < e.u) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    auto dup = std::adjacent_find(edges_.begin(), edges_.end(),
                                  [](const Edge& a, const Edge& b) { return a.id == b.id; });
    if (dup != edges_.end()) throw std::invalid_argument("duplicate edge id=" + std::to_string(raw(dup->id)));
}

bool MultiGraph::has_node(NodeId n) const
{
    return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

std::optional<std::size_t> MultiGraph::node_index(NodeId n) const
{
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
    if (it == nodes_.end() || *it != n) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

const Edge* MultiGraph::find_edge(EdgeId id) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId x) { return e.id < x; });
    if (it == edges_.end() || it->id != id) return nullptr;
    return &*it;
}

const Edge& MultiGraph::edge(EdgeId id) const
{
    const Edge* e = find_edge(id);
    if (!e) throw std::out_of_range("no such edge: id=" + std::to_string(raw(id)));
    return *e;
}

ReliabilityInstance::ReliabilityInstance(MultiGraph graph, std::vector<NodeId> terminals, std::optional<int> bound)
    : graph_(std::move(graph)), terminals_(make_node_set(std::move(terminals))), bound_(bound)
{
    if (terminals_.empty()) throw std::invalid_argument("terminal set K is empty");
    for (NodeId k : terminals_) {
        if (!graph_.has_node(k))
            throw std::invalid_argument("terminal " + std::to_string(raw(k)) + " is not a node of the graph");
    }
    if (bound_ && *bound_ < 0) throw std::invalid_argument("energy bound must be nonnegative");
}

ReliabilityInstance ReliabilityInstance::with_bound(std::optional<int> bound) const
{
    return ReliabilityInstance(graph_, terminals_, bound);
}

Terminated contract(const MultiGraph& g, const NodeSet& terminals, EdgeId e)
{
    const Edge& pivot = g.edge(e);
    const NodeId keep = pivot.u;
    const NodeId gone = pivot.v;
    auto pi = [&](NodeId n) { return n == gone ? keep : n; };

    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (const Edge& x : g.edges()) {
        if (x.id != e) edges.push_back(reattach(x, pi(x.u), pi(x.v)));
    }
    std::vector<NodeId> nodes;
    nodes.reserve(g.node_count());
    for (NodeId n : g.nodes()) {
        if (n != gone || pivot.is_loop()) nodes.push_back(n);
    }
    return {GraphAccess::make(std::move(nodes), std::move(edges)), project(terminals, pi)};
}

MultiGraph delete_edge(const MultiGraph& g, EdgeId e)
{
    g.edge(e);
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (const Edge& x : g.edges()) {
        if (x.id != e) edges.push_back(x);
    }
    return GraphAccess::make(std::vector<NodeId>(g.nodes().begin(), g.nodes().end()), std::move(edges));
}

Terminated identify(const MultiGraph& g, const NodeSet& terminals, std::span<const NodeId> sep,
                    const Partition& part)
{
    if (part.ground_size() != sep.size()) throw std::invalid_argument("partition does not cover the separator");
    if (make_node_set({sep.begin(), sep.end()}).size() != sep.size())
        throw std::invalid_argument("separator lists a node twice");
    for (NodeId s : sep) {
        if (!g.has_node(s)) throw std::invalid_argument("separator node " + std::to_string(raw(s)) + " not in graph");
    }

    std::vector<NodeId> representative(part.block_count(), NodeId{UINT32_MAX});
    for (std::size_t i = 0; i < sep.size(); ++i) {
        NodeId& r = representative[part.block_of(i)];
        r = std::min(r, sep[i]);
    }
    auto pi = [&](NodeId n) {
        for (std::size_t i = 0; i < sep.size(); ++i)
            if (sep[i] == n) return representative[part.block_of(i)];
        return n;
    };

    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& x : g.edges()) edges.push_back(reattach(x, pi(x.u), pi(x.v)));
    NodeSet nodes = project(NodeSet(g.nodes().begin(), g.nodes().end()), pi);
    return {GraphAccess::make(std::move(nodes), std::move(edges)), project(terminals, pi)};
}

bool is_pathset(const MultiGraph& g, const NodeSet& terminals, const State& s)
{
    if (terminals.size() <= 1) return true;
    DisjointSets sets(g.node_count());
    for (EdgeId id : s.operative) {
        const Edge& e = g.edge(id);
        sets.unite(*g.node_index(e.u), *g.node_index(e.v));
    }
    const auto first = g.node_index(terminals.front());
    if (!first) return false;
    for (NodeId k : terminals) {
        const auto idx = g.node_index(k);
        if (!idx || !sets.same(*first, *idx)) return false;
    }
    return true;
}

bool check_hypothesis2(const MultiGraph& g1, const NodeSet& k1, const MultiGraph& g2, const NodeSet& k2,
                       std::span<const NodeId> sep)
{
    std::vector<NodeId> all(g1.nodes().begin(), g1.nodes().end());
    all.insert(all.end(), g2.nodes().begin(), g2.nodes().end());
    const NodeSet nodes = make_node_set(std::move(all));
    auto index = [&](NodeId n) {
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), n) - nodes.begin());
    };

    DisjointSets sets(nodes.size());
    for (const MultiGraph* g : {&g1, &g2})
        for (const Edge& e : g->edges()) sets.unite(index(e.u), index(e.v));

    std::vector<std::size_t> sep_roots;
    for (NodeId s : sep) {
        if (std::binary_search(nodes.begin(), nodes.end(), s)) sep_roots.push_back(sets.find(index(s)));
    }
    for (const NodeSet* k : {&k1, &k2}) {
        for (NodeId v : *k) {
            if (!std::binary_search(nodes.begin(), nodes.end(), v)) return false;
            const std::size_t root = sets.find(index(v));
            if (std::find(sep_roots.begin(), sep_roots.end(), root) == sep_roots.end()) return false;
        }
    }
    return true;
}

} // namespace relfact
