#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"
#include "modcanon/realizer.hpp"

namespace modcanon {

using basic_element = std::uint64_t;
using ColorRelation = std::vector<std::pair<basic_element, basic_element>>;
/// A color with every basic element replaced by its rank in the element order; sorted.
using NaturalColor = std::vector<std::pair<std::size_t, std::size_t>>;

/// Graph whose vertices are colored with binary relations over a linearly ordered set of basic elements.
///
/// Basic elements live in their own label space, disjoint from vertex ids. Their order is the order of
/// `basic_elements`.
class LOColoredGraph {
public:
    LOColoredGraph(Graph graph, std::vector<basic_element> basic_elements, std::vector<ColorRelation> colors)
        : graph_(std::move(graph)), basic_(std::move(basic_elements)), colors_(std::move(colors)) {
        if (basic_.empty()) throw invalid_input("LO-colored graph needs at least one basic element");
        if (colors_.size() != graph_.order()) throw invalid_input("one color per vertex required");
        for (std::size_t i = 0; i < basic_.size(); ++i) {
            auto [it, fresh] = rank_.try_emplace(basic_[i], i);
            if (!fresh) throw invalid_input("duplicate basic element " + std::to_string(basic_[i]));
        }
        for (auto& c : colors_) {
            for (auto [a, b] : c)
                if (!rank_.contains(a) || !rank_.contains(b)) throw invalid_input("color uses an unknown basic element");
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
        }
    }

    const Graph& graph() const noexcept { return graph_; }
    std::size_t order() const noexcept { return graph_.order(); }
    const std::vector<basic_element>& basic_elements() const noexcept { return basic_; }
    const ColorRelation& color(vertex_t v) const { return colors_.at(v); }
    const std::vector<ColorRelation>& colors() const noexcept { return colors_; }
    std::size_t basic_rank(basic_element e) const { return rank_.at(e); }

private:
    Graph graph_;
    std::vector<basic_element> basic_;
    std::vector<ColorRelation> colors_;
    std::unordered_map<basic_element, std::size_t> rank_;
};

inline NaturalColor natural_color(const LOColoredGraph& h, vertex_t v) {
    NaturalColor out;
    for (auto [a, b] : h.color(v)) out.emplace_back(h.basic_rank(a), h.basic_rank(b));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<NaturalColor> natural_colors(const LOColoredGraph& h) {
    std::vector<NaturalColor> out;
    out.reserve(h.order());
    for (vertex_t v = 0; v < h.order(); ++v) out.push_back(natural_color(h, v));
    return out;
}

/// Index of each vertex's color among the distinct used colors, ordered lexicographically by natural color.
inline std::vector<std::size_t> color_ranks(const LOColoredGraph& h) {
    auto nat = natural_colors(h);
    auto used = nat;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<std::size_t> out;
    out.reserve(nat.size());
    for (const auto& c : nat) out.push_back(static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), c) - used.begin()));
    return out;
}

/// Replaces every color by the singleton {(r, r)} where r is its color rank; basic elements become 0..k-1.
inline LOColoredGraph compress_colors(const LOColoredGraph& h) {
    const auto ranks = color_ranks(h);
    const std::size_t used = ranks.empty() ? 1 : *std::max_element(ranks.begin(), ranks.end()) + 1;
    std::vector<basic_element> basic(used);
    std::iota(basic.begin(), basic.end(), basic_element{0});
    std::vector<ColorRelation> colors;
    colors.reserve(ranks.size());
    for (std::size_t r : ranks) colors.push_back({{r, r}});
    return LOColoredGraph(h.graph(), std::move(basic), std::move(colors));
}

/// Comparable form of an ordered colored graph: vertex count, edges by position, colors by position.
struct ColoredEncoding {
    std::size_t order = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<NaturalColor> colors;
    friend auto operator<=>(const ColoredEncoding&, const ColoredEncoding&) = default;
};

/// An LO-colored graph whose vertices are renumbered by a linear order (vertex i is the i-th smallest).
///
/// The order on the full universe puts every vertex before every basic element, then follows the
/// basic-element order. `origin[i]` names the input vertex placed at position i.
struct OrderedLOColoredGraph {
    LOColoredGraph graph;
    std::vector<vertex_t> origin;

    /// A universe element: a vertex position, or a basic element by rank.
    struct Element {
        bool basic = false;
        std::size_t index = 0;
        friend auto operator<=>(const Element&, const Element&) = default;
    };

    std::vector<Element> universe() const {
        std::vector<Element> out;
        for (std::size_t i = 0; i < graph.order(); ++i) out.push_back({false, i});
        for (std::size_t i = 0; i < graph.basic_elements().size(); ++i) out.push_back({true, i});
        return out;
    }

    ColoredEncoding encoding() const {
        ColoredEncoding e;
        e.order = graph.order();
        for (const Edge& x : graph.graph().edges()) e.edges.emplace_back(x.u, x.v);
        e.colors = natural_colors(graph);
        return e;
    }
};

/// Places h's vertices in the given sequence.
inline OrderedLOColoredGraph order_by(const LOColoredGraph& h, std::vector<vertex_t> sequence) {
    const std::size_t n = h.order();
    if (sequence.size() != n) throw invalid_input("vertex sequence has wrong length");
    std::vector<vertex_t> pos(n, no_vertex);
    for (std::size_t i = 0; i < n; ++i) {
        if (sequence[i] >= n || pos[sequence[i]] != no_vertex) throw invalid_input("vertex sequence is not a permutation");
        pos[sequence[i]] = i;
    }
    std::vector<ColorRelation> colors;
    colors.reserve(n);
    for (vertex_t v : sequence) colors.push_back(h.color(v));
    return {LOColoredGraph(relabel(h.graph(), pos), h.basic_elements(), std::move(colors)), std::move(sequence)};
}

/// Canon of a complete or edgeless colored graph: vertices sorted by natural color. Vertices with equal
/// colors are interchangeable, so the tie order does not matter.
inline OrderedLOColoredGraph canon_complete_or_edgeless(const LOColoredGraph& h) {
    const std::size_t n = h.order();
    const std::size_t m = h.graph().edge_count();
    if (m != 0 && m != n * (n - 1) / 2) throw invalid_input("graph is neither complete nor edgeless");
    const auto nat = natural_colors(h);
    std::vector<vertex_t> seq(n);
    std::iota(seq.begin(), seq.end(), vertex_t{0});
    std::stable_sort(seq.begin(), seq.end(), [&](vertex_t a, vertex_t b) { return nat[a] < nat[b]; });
    return order_by(h, std::move(seq));
}

/// Canon of a colored prime permutation graph.
///
/// Each realizer contributes its first order as a candidate vertex order; the candidate whose compressed
/// encoding is lexicographically least wins. The candidate set depends only on the isomorphism type, so
/// the choice is canonical.
inline OrderedLOColoredGraph canon_prime_colored(const LOColoredGraph& h) {
    const LOColoredGraph compressed = compress_colors(h);
    const auto realizers = find_realizers(h.graph());
    if (realizers.empty())
        throw unsupported_class("unsupported graph class: prime quotient on " + std::to_string(h.order()) + " vertices is not a permutation graph");
    const std::vector<vertex_t>* best = nullptr;
    ColoredEncoding best_code;
    for (const Realizer& r : realizers) {
        ColoredEncoding code = order_by(compressed, r.order1).encoding();
        if (best == nullptr || code < best_code) {
            best = &r.order1;
            best_code = std::move(code);
        }
    }
    return order_by(h, *best);
}

}  // namespace modcanon
