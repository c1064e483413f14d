#include "relfact/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <stdexcept>

namespace relfact {

namespace {

using json = nlohmann::json;

const json& require(const json& doc, const char* key)
{
    if (!doc.contains(key)) throw std::invalid_argument(std::string("missing key \"") + key + "\"");
    return doc.at(key);
}

class NameTable {
public:
    explicit NameTable(const std::vector<std::string>& names)
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (!ids_.emplace(names[i], NodeId{static_cast<std::uint32_t>(i)}).second)
                throw std::invalid_argument("duplicate node name \"" + names[i] + "\"");
        }
    }

    NodeId operator()(const json& name) const
    {
        const auto s = name.get<std::string>();
        auto it = ids_.find(s);
        if (it == ids_.end()) throw std::invalid_argument("undeclared node \"" + s + "\"");
        return it->second;
    }

private:
    std::map<std::string, NodeId> ids_;
};

std::vector<EdgeId> edge_ids(const json& list)
{
    std::vector<EdgeId> out;
    for (const auto& id : list) out.push_back(EdgeId{id.get<std::uint32_t>()});
    return out;
}

InstanceFile parse(const json& doc)
{
    if (!doc.is_object()) throw std::invalid_argument("instance must be a JSON object");
    const auto names = require(doc, "nodes").get<std::vector<std::string>>();
    const NameTable lookup(names);

    std::vector<NodeId> nodes;
    for (std::size_t i = 0; i < names.size(); ++i) nodes.push_back(NodeId{static_cast<std::uint32_t>(i)});

    std::vector<Edge> edges;
    for (const auto& e : require(doc, "edges")) {
        const auto id = require(e, "id");
        if (!id.is_number_integer() || id.get<long long>() < 0)
            throw std::invalid_argument("edge id must be a nonnegative integer");
        const double p = require(e, "p").get<double>();
        edges.push_back(Edge{lookup(require(e, "u")), lookup(require(e, "v")), EdgeId{id.get<std::uint32_t>()}, p});
    }

    std::vector<NodeId> terminals;
    for (const auto& k : require(doc, "K")) terminals.push_back(lookup(k));

    std::optional<int> bound;
    if (doc.contains("bound")) {
        if (!doc["bound"].is_number_integer()) throw std::invalid_argument("bound must be an integer");
        bound = doc["bound"].get<int>();
    }

    InstanceFile file{names, ReliabilityInstance(MultiGraph(std::move(nodes), std::move(edges)), terminals, bound),
                      std::nullopt, std::nullopt, std::nullopt};

    if (doc.contains("separator")) {
        std::vector<NodeId> sep;
        for (const auto& s : doc["separator"]) sep.push_back(lookup(s));
        file.separator = std::move(sep);
    }
    if (doc.contains("parts")) {
        if (!file.separator) throw std::invalid_argument("\"parts\" given without \"separator\"");
        const auto& parts = doc["parts"];
        file.part1_edges = edge_ids(require(parts, "g1"));
        file.part2_edges = edge_ids(require(parts, "g2"));
    }
    return file;
}

} // namespace

InstanceFile parse_instance(const nlohmann::json& doc)
{
    try {
        return parse(doc);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed instance: ") + e.what());
    }
}

InstanceFile load_instance(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path.string() + ": " + e.what());
    }
    return parse_instance(doc);
}

Decomposition decomposition_of(const InstanceFile& file)
{
    if (!file.separator) throw std::invalid_argument("instance has no separator");
    const ReliabilityInstance& inst = file.instance;
    const std::vector<NodeId>& sep = *file.separator;
    if (!file.part1_edges) return split_by_separator(inst, sep);

    const MultiGraph& g = inst.graph();
    std::map<EdgeId, int> side;
    for (int s = 0; s < 2; ++s) {
        for (EdgeId id : s == 0 ? *file.part1_edges : *file.part2_edges) {
            g.edge(id);
            if (!side.emplace(id, s).second)
                throw std::invalid_argument("Hypothesis 1 violated: shared edge id=" + std::to_string(raw(id)));
        }
    }

    std::vector<NodeId> nodes[2] = {sep, sep};
    std::vector<Edge> edges[2];
    for (const Edge& e : g.edges()) {
        auto it = side.find(e.id);
        if (it == side.end())
            throw std::invalid_argument("edge id=" + std::to_string(raw(e.id)) + " assigned to neither part");
        edges[it->second].push_back(e);
        nodes[it->second].push_back(e.u);
        nodes[it->second].push_back(e.v);
    }
    // Nodes without edges go to part 1.
    for (NodeId n : g.nodes()) {
        const bool placed = std::find(nodes[0].begin(), nodes[0].end(), n) != nodes[0].end() ||
                            std::find(nodes[1].begin(), nodes[1].end(), n) != nodes[1].end();
        if (!placed) nodes[0].push_back(n);
    }

    auto part = [&](int s) {
        MultiGraph graph(nodes[s], edges[s]);
        std::vector<NodeId> terminals = sep;
        for (NodeId k : inst.terminals()) {
            if (graph.has_node(k)) terminals.push_back(k);
        }
        return ReliabilityInstance(std::move(graph), std::move(terminals));
    };
    return Decomposition{part(0), part(1), sep};
}

nlohmann::json to_json(const Polynomial& p)
{
    return nlohmann::json(std::vector<double>(p.coeffs().begin(), p.coeffs().end()));
}

} // namespace relfact
