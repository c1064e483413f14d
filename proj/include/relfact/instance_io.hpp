#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "relfact/factorizer.hpp"
#include "relfact/graph.hpp"
#include "relfact/poly.hpp"

namespace relfact {

/// Parsed instance document:
///
///   {"nodes": ["a", "b", ...],
///    "edges": [{"u": "a", "v": "b", "id": 1, "p": 0.9}, ...],
///    "K": ["a", "b"],
///    "bound": 3,                                  (optional)
///    "separator": ["k1", "k2"],                   (optional)
///    "parts": {"g1": [1, 2], "g2": [3, 4]}}       (optional, needs "separator")
///
/// Node names map to NodeId by their position in "nodes".
struct InstanceFile {
    std::vector<std::string> node_names;
    ReliabilityInstance instance;
    std::optional<std::vector<NodeId>> separator;
    std::optional<std::vector<EdgeId>> part1_edges;
    std::optional<std::vector<EdgeId>> part2_edges;
};

/// Throws std::invalid_argument naming the violated rule.
InstanceFile parse_instance(const nlohmann::json& doc);
InstanceFile load_instance(const std::filesystem::path& path);

/// Decomposition described by the file: explicit parts when given, otherwise
/// split_by_separator. Separator nodes are added to the terminal sets.
Decomposition decomposition_of(const InstanceFile& file);

/// Coefficient list, index = degree.
nlohmann::json to_json(const Polynomial& p);

} // namespace relfact
