#include "relfact/factorizer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "relfact/union_find.hpp"

namespace relfact {

namespace {

[[noreturn]] void violated(const std::string& what)
{
    throw std::invalid_argument("Hypothesis 1 violated: " + what);
}

std::string node_name(NodeId n)
{
    return std::to_string(raw(n));
}

Polynomial combine(const PartPolynomials& parts, const ConnMatrixInverse& b, std::optional<int> bound)
{
    const std::size_t m = parts.order.size();
    Polynomial sum;
    for (std::size_t i = 0; i < m; ++i) {
        if (parts.side1[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) {
            const Rational& coefficient = b.at(i, j);
            if (coefficient == 0 || parts.side2[j].is_zero()) continue;
            Polynomial product = bound ? mul_up_to(parts.side1[i], parts.side2[j], static_cast<std::size_t>(*bound))
                                       : parts.side1[i] * parts.side2[j];
            sum += coefficient.get_d() * product;
        }
    }
    return sum;
}

Polynomial factorize_impl(const Decomposition& d, std::optional<int> bound, const FactorizeOptions& opts)
{
    if (validate(d) == Validation::zero_reliability) return {};
    const PartPolynomials parts = part_polynomials(d, bound, opts);
    const ConnMatrixInverse b = invert_exact(ConnMatrix(parts.order));
    return combine(parts, b, bound);
}

} // namespace

Validation validate(const Decomposition& d)
{
    const MultiGraph& g1 = d.part1.graph();
    const MultiGraph& g2 = d.part2.graph();
    const NodeSet sep = make_node_set(d.separator);
    if (sep.empty()) violated("empty separator");
    if (sep.size() != d.separator.size()) violated("separator lists a node twice");

    for (const Edge& e : g2.edges()) {
        if (g1.find_edge(e.id)) violated("shared edge id=" + std::to_string(raw(e.id)));
    }
    NodeSet shared;
    std::set_intersection(g1.nodes().begin(), g1.nodes().end(), g2.nodes().begin(), g2.nodes().end(),
                          std::back_inserter(shared));
    for (NodeId n : shared) {
        if (!std::binary_search(sep.begin(), sep.end(), n))
            violated("node " + node_name(n) + " shared by both parts but not in the separator");
    }
    for (NodeId s : sep) {
        if (!g1.has_node(s)) violated("separator node " + node_name(s) + " missing from part 1");
        if (!g2.has_node(s)) violated("separator node " + node_name(s) + " missing from part 2");
        if (!std::binary_search(d.part1.terminals().begin(), d.part1.terminals().end(), s))
            violated("separator node " + node_name(s) + " is not a terminal of part 1");
        if (!std::binary_search(d.part2.terminals().begin(), d.part2.terminals().end(), s))
            violated("separator node " + node_name(s) + " is not a terminal of part 2");
    }

    if (!check_hypothesis2(g1, d.part1.terminals(), g2, d.part2.terminals(), d.separator))
        return Validation::zero_reliability;
    return Validation::ok;
}

Decomposition split_by_separator(const ReliabilityInstance& inst, std::vector<NodeId> sep)
{
    const MultiGraph& g = inst.graph();
    const NodeSet sep_set = make_node_set(sep);
    if (sep.empty() || sep_set.size() != sep.size()) throw std::invalid_argument("separator must list distinct nodes");
    for (NodeId s : sep) {
        if (!g.has_node(s)) throw std::invalid_argument("separator node " + node_name(s) + " not in graph");
    }
    auto in_sep = [&](NodeId n) { return std::binary_search(sep_set.begin(), sep_set.end(), n); };

    DisjointSets sets(g.node_count());
    for (const Edge& e : g.edges()) {
        if (!in_sep(e.u) && !in_sep(e.v)) sets.unite(*g.node_index(e.u), *g.node_index(e.v));
    }

    // Components in order of their smallest node.
    std::vector<std::size_t> roots;
    std::vector<std::size_t> component(g.node_count(), SIZE_MAX);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (in_sep(g.nodes()[i])) continue;
        const std::size_t r = sets.find(i);
        auto it = std::find(roots.begin(), roots.end(), r);
        component[i] = static_cast<std::size_t>(it - roots.begin());
        if (it == roots.end()) roots.push_back(r);
    }
    if (roots.size() < 2) throw std::invalid_argument("not a separator");

    auto edge_component = [&](const Edge& e) -> std::optional<std::size_t> {
        if (!in_sep(e.u)) return component[*g.node_index(e.u)];
        if (!in_sep(e.v)) return component[*g.node_index(e.v)];
        return std::nullopt;
    };
    std::vector<std::size_t> edges_in(roots.size(), 0);
    std::size_t part1_edges = 0;
    for (const Edge& e : g.edges()) {
        if (auto c = edge_component(e)) ++edges_in[*c]; else ++part1_edges;
    }

    std::vector<bool> to_part1(roots.size(), false);
    to_part1[0] = true;
    part1_edges += edges_in[0];
    for (std::size_t c = 1; c + 1 < roots.size(); ++c) {
        if (2 * (part1_edges + edges_in[c]) > g.edge_count()) break;
        to_part1[c] = true;
        part1_edges += edges_in[c];
    }

    std::vector<NodeId> nodes[2] = {sep, sep};
    std::vector<Edge> edges[2];
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        if (component[i] != SIZE_MAX) nodes[to_part1[component[i]] ? 0 : 1].push_back(g.nodes()[i]);
    }
    for (const Edge& e : g.edges()) {
        const auto c = edge_component(e);
        edges[!c || to_part1[*c] ? 0 : 1].push_back(e);
    }

    auto part = [&](int side) {
        MultiGraph graph(nodes[side], edges[side]);
        std::vector<NodeId> terminals = sep;
        for (NodeId k : inst.terminals()) {
            if (graph.has_node(k)) terminals.push_back(k);
        }
        return ReliabilityInstance(std::move(graph), std::move(terminals));
    };
    return Decomposition{part(0), part(1), std::move(sep)};
}

ReliabilityInstance merge(const Decomposition& d)
{
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    std::vector<NodeId> terminals;
    for (const ReliabilityInstance* part : {&d.part1, &d.part2}) {
        nodes.insert(nodes.end(), part->graph().nodes().begin(), part->graph().nodes().end());
        edges.insert(edges.end(), part->graph().edges().begin(), part->graph().edges().end());
        terminals.insert(terminals.end(), part->terminals().begin(), part->terminals().end());
    }
    return ReliabilityInstance(MultiGraph(std::move(nodes), std::move(edges)), std::move(terminals));
}

PartPolynomials part_polynomials(const Decomposition& d, std::optional<int> bound, const FactorizeOptions& opts)
{
    const std::size_t n = d.separator.size();
    std::vector<Partition> canonical = enumerate_partitions(n, opts.max_separator);
    PartPolynomials out;
    if (opts.order) {
        auto given = *opts.order;
        std::sort(given.begin(), given.end());
        std::sort(canonical.begin(), canonical.end());
        if (given != canonical)
            throw std::invalid_argument("state order is not a permutation of the separator partitions");
        out.order = *opts.order;
    } else {
        out.order = std::move(canonical);
    }

    const std::size_t m = out.order.size();
    out.side1.resize(m);
    out.side2.resize(m);
    const std::size_t tasks = 2 * m;
    std::vector<std::exception_ptr> errors(tasks);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
            try {
                const bool first = t % 2 == 0;
                const std::size_t i = t / 2;
                const ReliabilityInstance& part = first ? d.part1 : d.part2;
                Terminated g = identify(part.graph(), part.terminals(), d.separator, out.order[i]);
                const ReliabilityInstance inst(std::move(g.graph), std::move(g.terminals));
                Polynomial poly = bound ? truncated_poly(inst, *bound, opts.solver).representative()
                                        : reliability_poly(inst, opts.solver);
                (first ? out.side1 : out.side2)[i] = std::move(poly);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        }
    };

    const std::size_t threads = std::clamp<std::size_t>(opts.jobs, 1, tasks);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

Polynomial factorize(const Decomposition& d, const FactorizeOptions& opts)
{
    return factorize_impl(d, std::nullopt, opts);
}

TruncatedPoly factorize(const Decomposition& d, int bound, const FactorizeOptions& opts)
{
    if (bound < 0) throw std::invalid_argument("energy bound must be nonnegative");
    return TruncatedPoly(bound, factorize_impl(d, bound, opts));
}

} // namespace relfact
