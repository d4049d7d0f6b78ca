#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "modcanon/canon.hpp"
#include "modcanon/decomposition.hpp"
#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"

namespace modcanon {

/// Raised when a cograph-only operation meets a prime node.
class not_a_cograph : public invalid_input {
public:
    explicit not_a_cograph(VertexSet witness)
        : invalid_input("not a cograph: prime node " + witness.to_string()), witness_(std::move(witness)) {}
    const VertexSet& witness() const noexcept { return witness_; }

private:
    VertexSet witness_;
};

/// First prime node of the tree in preorder (the root comes first), if any.
inline std::optional<std::size_t> first_prime_node(const MDTree& tree) {
    for (std::size_t id = 0; id < tree.size(); ++id)
        if (tree.node(id).kind == NodeKind::prime) return id;
    return std::nullopt;
}

inline bool is_cograph(const MDTree& tree) { return !first_prime_node(tree).has_value(); }
inline bool is_cograph(const Graph& g) { return is_cograph(md_tree(g)); }

/// MD tree of a cograph with 0 on disjoint-union nodes and 1 on join nodes.
class Cotree {
public:
    explicit Cotree(MDTree tree) : tree_(std::move(tree)) {
        if (auto p = first_prime_node(tree_)) throw not_a_cograph(tree_.node(*p).vertices);
    }

    const MDTree& tree() const noexcept { return tree_; }

    /// 0 (union) or 1 (join); nullopt on leaves.
    std::optional<int> label(std::size_t node) const {
        switch (tree_.node(node).kind) {
            case NodeKind::parallel: return 0;
            case NodeKind::series: return 1;
            default: return std::nullopt;
        }
    }

private:
    MDTree tree_;
};

inline Cotree cotree(const Graph& g) { return Cotree(md_tree(g)); }

/// Canonical string of every subtree: "L" for a leaf, otherwise the label followed by the
/// parenthesized, lexicographically sorted child strings. Indexed by node id.
inline std::vector<std::string> cotree_encodings(const Cotree& ct) {
    const MDTree& t = ct.tree();
    std::vector<std::string> code(t.size());
    for (std::size_t id : t.postorder()) {
        const auto& ch = t.node(id).children;
        if (ch.empty()) {
            code[id] = "L";
            continue;
        }
        std::vector<std::string> parts;
        parts.reserve(ch.size());
        for (std::size_t c : ch) parts.push_back(code[c]);
        std::sort(parts.begin(), parts.end());
        std::string s = std::to_string(*ct.label(id)) + "(";
        for (const auto& p : parts) s += p;
        code[id] = s + ")";
    }
    return code;
}

/// Numbers the leaves 1..n along a walk of the cotree whose children are sorted by encoding.
/// Equal sibling encodings are isomorphic subtrees, so their relative order does not affect the result.
inline Canon canonize_cograph(const Graph& g) {
    const Cotree ct = cotree(g);
    const MDTree& t = ct.tree();
    const auto code = cotree_encodings(ct);

    std::vector<std::size_t> witness(g.order(), 0);
    std::size_t next = 1;
    std::vector<std::size_t> stack{MDTree::root};
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        const auto& node = t.node(id);
        if (node.children.empty()) {
            witness[node.vertices.min()] = next++;
            continue;
        }
        std::vector<std::size_t> ch = node.children;
        std::stable_sort(ch.begin(), ch.end(), [&](std::size_t a, std::size_t b) { return code[a] < code[b]; });
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return Canon::from_witness(g, std::move(witness));
}

}  // namespace modcanon
