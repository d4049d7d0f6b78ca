#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"
#include "modcanon/modules.hpp"

namespace modcanon {

enum class WeakOrder { less, greater, incomparable };

/// Compares w1 and w2 under the pivot-v order: w1 is below w2 iff M(v,w2) is a proper subset of M(v,w1).
inline WeakOrder weak_order_compare(const WedgeClasses& wc, vertex_t v, vertex_t w1, vertex_t w2) {
    const VertexSet m1 = wc.spanned_module(v, w1);
    const VertexSet m2 = wc.spanned_module(v, w2);
    if (m2.is_proper_subset_of(m1)) return WeakOrder::less;
    if (m1.is_proper_subset_of(m2)) return WeakOrder::greater;
    return WeakOrder::incomparable;
}

inline WeakOrder weak_order_compare(const Graph& g, vertex_t v, vertex_t w1, vertex_t w2) {
    return weak_order_compare(WedgeClasses(g), v, w1, w2);
}

/// Position of every vertex's incomparability class under the pivot order. rank[pivot] == class_count - 1.
struct WeakOrderRank {
    vertex_t pivot = 0;
    std::vector<std::size_t> rank;
    std::size_t class_count = 0;
};

/// Ranks the incomparability classes of the pivot order, smallest class first.
///
/// Throws consistency_error if the relation is not a strict weak order; that cannot happen for a
/// correct spanned-module table.
inline WeakOrderRank weak_order_ranks(const WedgeClasses& wc, vertex_t pivot) {
    const std::size_t n = wc.order();
    if (pivot >= n) throw invalid_input("pivot outside graph");
    std::vector<VertexSet> spanned;
    spanned.reserve(n);
    for (vertex_t w = 0; w < n; ++w) spanned.push_back(wc.spanned_module(pivot, w));

    // below[w] counts the w' strictly below w, i.e. with M(v,w) a proper subset of M(v,w').
    std::vector<std::size_t> below(n, 0);
    std::vector<char> less(n * n, 0);  // less[a*n+b]: a strictly below b
    for (vertex_t a = 0; a < n; ++a)
        for (vertex_t b = 0; b < n; ++b)
            if (a != b && spanned[b].is_proper_subset_of(spanned[a])) {
                less[a * n + b] = 1;
                ++below[b];
            }

    std::vector<std::size_t> levels = below;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    WeakOrderRank out;
    out.pivot = pivot;
    out.class_count = levels.size();
    out.rank.resize(n);
    for (vertex_t w = 0; w < n; ++w)
        out.rank[w] = static_cast<std::size_t>(std::lower_bound(levels.begin(), levels.end(), below[w]) - levels.begin());

    // A strict weak order is exactly a relation induced by a map into a chain.
    for (vertex_t a = 0; a < n; ++a)
        for (vertex_t b = 0; b < n; ++b)
            if (static_cast<bool>(less[a * n + b]) != (out.rank[a] < out.rank[b]))
                throw consistency_error("pivot order at " + std::to_string(pivot) + " is not a strict weak order (vertices " +
                                        std::to_string(a) + ", " + std::to_string(b) + ")");
    for (vertex_t w = 0; w < n; ++w)
        if ((out.rank[w] == out.class_count - 1) != (w == pivot))
            throw consistency_error("pivot is not the unique top class at " + std::to_string(pivot));
    return out;
}

inline WeakOrderRank weak_order_ranks(const Graph& g, vertex_t pivot) { return weak_order_ranks(WedgeClasses(g), pivot); }

/// D(i, v): {v} together with every M(v,w) whose w sits at rank i. Level 0 is V; levels at or beyond the
/// pivot's rank give {v}.
inline VertexSet decomposition_set(const WedgeClasses& wc, const WeakOrderRank& ranks, std::size_t level) {
    const std::size_t n = wc.order();
    if (level > n) throw invalid_input("decomposition level " + std::to_string(level) + " outside 0.." + std::to_string(n));
    VertexSet out = VertexSet::singleton(n, ranks.pivot);
    for (vertex_t w = 0; w < n; ++w)
        if (ranks.rank[w] == level) out |= wc.spanned_module(ranks.pivot, w);
    return out;
}

inline VertexSet decomposition_set(const Graph& g, std::size_t level, vertex_t v) {
    WedgeClasses wc(g);
    return decomposition_set(wc, weak_order_ranks(wc, v), level);
}

/// D(0,v) ⊋ D(1,v) ⊋ ... ⊋ D(k,v) = {v}.
inline std::vector<VertexSet> decomposition_chain(const WedgeClasses& wc, const WeakOrderRank& ranks) {
    std::vector<VertexSet> chain;
    chain.reserve(ranks.class_count);
    for (std::size_t i = 0; i < ranks.class_count; ++i) {
        chain.push_back(decomposition_set(wc, ranks, i));
        if (i > 0 && !chain[i].is_proper_subset_of(chain[i - 1]))
            throw consistency_error("decomposition chain of vertex " + std::to_string(ranks.pivot) + " does not shrink at level " +
                                    std::to_string(i));
    }
    return chain;
}

/// D_G(v): v's component, co-component, or maximal proper module, by the usual three-way split.
inline VertexSet maximal_proper_module_of(const Graph& g, vertex_t v) {
    if (v >= g.order()) throw invalid_input("vertex outside graph");
    if (g.order() == 1) return VertexSet::singleton(1, v);
    for (auto&& parts : {components(g), co_components(g)})
        if (parts.size() > 1)
            for (const auto& part : parts)
                if (part.contains(v)) return part;
    WedgeClasses wc(g);
    return decomposition_set(wc, weak_order_ranks(wc, v), 1);
}

enum class NodeKind { leaf, parallel, series, prime };

inline std::string_view to_string(NodeKind k) {
    switch (k) {
        case NodeKind::leaf: return "leaf";
        case NodeKind::parallel: return "parallel";
        case NodeKind::series: return "series";
        case NodeKind::prime: return "prime";
    }
    return "?";
}

struct MDNode {
    VertexSet vertices;
    NodeKind kind = NodeKind::leaf;
    std::size_t parent = 0;  // equals own id at the root
    std::vector<std::size_t> children;
};

/// Modular decomposition tree: the distinct D(i,v) ordered by inclusion.
///
/// Node ids follow a preorder walk where siblings are visited by smallest contained vertex, so the
/// numbering (and any export of it) depends only on the graph.
class MDTree {
public:
    MDTree() = default;
    MDTree(std::size_t n, std::vector<MDNode> nodes) : n_(n), nodes_(std::move(nodes)) {
        leaf_.assign(n_, 0);
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].kind == NodeKind::leaf) leaf_[nodes_[i].vertices.min()] = i;
    }

    static constexpr std::size_t root = 0;

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const MDNode& node(std::size_t id) const { return nodes_.at(id); }
    const std::vector<MDNode>& nodes() const noexcept { return nodes_; }
    std::size_t leaf_of(vertex_t v) const { return leaf_.at(v); }

    /// Children before parents.
    std::vector<std::size_t> postorder() const {
        std::vector<std::size_t> out;
        out.reserve(nodes_.size());
        std::vector<std::pair<std::size_t, bool>> stack{{root, false}};
        while (!stack.empty()) {
            auto [id, expanded] = stack.back();
            stack.pop_back();
            if (expanded) {
                out.push_back(id);
                continue;
            }
            stack.push_back({id, true});
            const auto& ch = nodes_[id].children;
            for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, false});
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<MDNode> nodes_;
    std::vector<std::size_t> leaf_;
};

namespace detail {

inline NodeKind classify(const Graph& g, const VertexSet& s) {
    if (s.size() == 1) return NodeKind::leaf;
    if (components_within(g, s, false).size() > 1) return NodeKind::parallel;
    if (components_within(g, s, true).size() > 1) return NodeKind::series;
    return NodeKind::prime;
}

}  // namespace detail

/// Builds the tree from the per-pivot chains D(0,v) ⊋ ... ⊋ {v}; equal sets from different pivots merge.
inline MDTree md_tree(const Graph& g) {
    const std::size_t n = g.order();
    WedgeClasses wc(g);

    std::vector<VertexSet> sets;
    std::vector<std::size_t> parent;
    std::unordered_map<VertexSet, std::size_t, VertexSetHash> index;
    auto intern = [&](const VertexSet& s) {
        auto [it, fresh] = index.try_emplace(s, sets.size());
        if (fresh) {
            sets.push_back(s);
            parent.push_back(it->second);
        }
        return it->second;
    };

    for (vertex_t v = 0; v < n; ++v) {
        const auto chain = decomposition_chain(wc, weak_order_ranks(wc, v));
        if (chain.front() != g.all_vertices()) throw consistency_error("level 0 of vertex " + std::to_string(v) + " is not V");
        std::size_t above = intern(chain.front());
        for (std::size_t i = 1; i < chain.size(); ++i) {
            const std::size_t id = intern(chain[i]);
            if (parent[id] == id) {
                parent[id] = above;
            } else if (parent[id] != above) {
                throw consistency_error("set " + chain[i].to_string() + " reached from two different parents");
            }
            above = id;
        }
    }

    const std::size_t root_tmp = index.at(g.all_vertices());
    std::vector<std::vector<std::size_t>> kids(sets.size());
    for (std::size_t id = 0; id < sets.size(); ++id)
        if (id != root_tmp) kids[parent[id]].push_back(id);
    for (auto& k : kids)
        std::sort(k.begin(), k.end(), [&](std::size_t a, std::size_t b) { return sets[a].min() < sets[b].min(); });

    std::vector<MDNode> nodes;
    nodes.reserve(sets.size());
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root_tmp, 0}};  // (tmp id, final parent)
    while (!stack.empty()) {
        auto [tmp, up] = stack.back();
        stack.pop_back();
        const std::size_t id = nodes.size();
        nodes.push_back({sets[tmp], detail::classify(g, sets[tmp]), id == 0 ? 0 : up, {}});
        if (id != 0) nodes[up].children.push_back(id);
        for (auto it = kids[tmp].rbegin(); it != kids[tmp].rend(); ++it) stack.push_back({*it, id});
    }
    return MDTree(n, std::move(nodes));
}

/// Modular contraction: one vertex per class, classes adjacent iff their representatives are.
struct Quotient {
    Graph graph;
    std::vector<std::size_t> class_map;  // vertex -> class id
    std::vector<VertexSet> classes;      // ordered by smallest member
};

namespace detail {

inline Quotient contract(const Graph& g, std::vector<VertexSet> classes) {
    std::vector<std::size_t> class_map(g.order(), 0);
    for (std::size_t c = 0; c < classes.size(); ++c) classes[c].for_each([&](vertex_t v) { class_map[v] = c; });
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < classes.size(); ++a)
        for (std::size_t b = a + 1; b < classes.size(); ++b)
            if (g.adjacent(classes[a].min(), classes[b].min())) edges.push_back({a, b});
    return {Graph(classes.size(), edges), std::move(class_map), std::move(classes)};
}

}  // namespace detail

inline Quotient quotient(const Graph& g) {
    if (g.order() == 1) return detail::contract(g, {g.all_vertices()});
    const MDTree tree = md_tree(g);
    std::vector<VertexSet> classes;
    for (std::size_t c : tree.node(MDTree::root).children) classes.push_back(tree.node(c).vertices);
    return detail::contract(g, std::move(classes));
}

/// Quotient of G[node] over the node's children, in child order.
inline Graph node_quotient(const Graph& g, const MDTree& tree, std::size_t node) {
    const auto& ch = tree.node(node).children;
    if (ch.empty()) return Graph(1);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < ch.size(); ++a)
        for (std::size_t b = a + 1; b < ch.size(); ++b)
            if (g.adjacent(tree.node(ch[a]).vertices.min(), tree.node(ch[b]).vertices.min())) edges.push_back({a, b});
    return Graph(ch.size(), edges);
}

}  // namespace modcanon
