#pragma once

#include <json.hpp>

#include "modcanon/cograph.hpp"
#include "modcanon/decomposition.hpp"

namespace modcanon {

/// {"n", "root", "nodes": [{"id", "kind", "vertices", "children"}]}; node ids are the tree's preorder ids.
inline nlohmann::json to_json(const MDTree& tree) {
    nlohmann::json nodes = nlohmann::json::array();
    for (std::size_t id = 0; id < tree.size(); ++id) {
        const MDNode& node = tree.node(id);
        nodes.push_back({{"id", id},
                         {"kind", std::string(to_string(node.kind))},
                         {"vertices", node.vertices.members()},
                         {"children", node.children}});
    }
    return {{"n", tree.order()}, {"root", MDTree::root}, {"nodes", std::move(nodes)}};
}

/// MD-tree schema plus "label": 0 (union) or 1 (join) on internal nodes, null on leaves.
inline nlohmann::json to_json(const Cotree& ct) {
    nlohmann::json out = to_json(ct.tree());
    for (auto& node : out["nodes"]) {
        const auto label = ct.label(node["id"].get<std::size_t>());
        node["label"] = label ? nlohmann::json(*label) : nlohmann::json(nullptr);
    }
    return out;
}

}  // namespace modcanon
