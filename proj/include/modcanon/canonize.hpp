#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "modcanon/canon.hpp"
#include "modcanon/colored.hpp"
#include "modcanon/decomposition.hpp"
#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"
#include "modcanon/representation.hpp"

namespace modcanon {

/// Global numbering of the vertices of consecutive blocks: inner vertex n of the block at position p
/// becomes n plus the sizes of all earlier blocks.
class BlockNumbering {
public:
    explicit BlockNumbering(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)), offsets_(sizes_.size(), 0) {
        for (std::size_t p = 1; p < sizes_.size(); ++p) offsets_[p] = offsets_[p - 1] + sizes_[p - 1];
    }

    std::size_t blocks() const noexcept { return sizes_.size(); }
    std::size_t block_size(std::size_t position) const { return sizes_.at(position); }
    std::size_t total() const noexcept { return sizes_.empty() ? 0 : offsets_.back() + sizes_.back(); }

    /// position is 0-based, inner is 1-based; the result lies in 1..total().
    std::size_t nb(std::size_t position, std::size_t inner) const {
        if (position >= sizes_.size()) throw invalid_input("block position out of range");
        if (inner < 1 || inner > sizes_[position])
            throw invalid_input("inner index " + std::to_string(inner) + " outside 1.." + std::to_string(sizes_[position]));
        return offsets_[position] + inner;
    }

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
};

/// Replaces every vertex of k by the ordered graph its natural color represents.
///
/// Blocks of adjacent vertices are fully joined; edges inside a block come from the pairs of its color.
inline OrderedGraph expand(const OrderedLOColoredGraph& k) {
    const auto colors = natural_colors(k.graph);
    std::vector<std::size_t> sizes;
    sizes.reserve(colors.size());
    for (const auto& c : colors) {
        Representation rep(std::vector<Representation::pair_type>(c.begin(), c.end()));
        sizes.push_back(decode_representation(rep).order());
    }
    const BlockNumbering nb(sizes);

    std::vector<OrderedGraph::pair_type> edges;
    for (const Edge& e : k.graph.graph().edges())
        for (std::size_t a = 1; a <= sizes[e.u]; ++a)
            for (std::size_t b = 1; b <= sizes[e.v]; ++b) edges.emplace_back(nb.nb(e.u, a), nb.nb(e.v, b));
    for (std::size_t p = 0; p < colors.size(); ++p)
        for (auto [a, b] : colors[p])
            if (a < b) edges.emplace_back(nb.nb(p, a), nb.nb(p, b));
    return OrderedGraph(nb.total(), std::move(edges));
}

/// Canon of a graph whose prime quotients are all permutation graphs (in particular every
/// permutation graph and every cograph).
///
/// Works bottom-up over the modular decomposition tree. Each internal node's quotient is colored with
/// the representations of its children's canons, canonized according to the node kind, and expanded.
/// Throws unsupported_class when a prime quotient has no realizer.
inline Canon canonize(const Graph& g) {
    const MDTree tree = md_tree(g);
    std::vector<OrderedGraph> canon(tree.size(), OrderedGraph(1));
    std::vector<std::vector<vertex_t>> sequence(tree.size());  // input vertices in canon order

    for (std::size_t id : tree.postorder()) {
        const MDNode& node = tree.node(id);
        if (node.kind == NodeKind::leaf) {
            sequence[id] = {node.vertices.min()};
            continue;
        }
        const std::size_t size = node.vertices.size();
        std::vector<basic_element> basic(size + 1);
        std::iota(basic.begin(), basic.end(), basic_element{0});
        std::vector<ColorRelation> colors;
        colors.reserve(node.children.size());
        for (std::size_t c : node.children) {
            const Representation rep = encode_representation(canon[c]);
            colors.emplace_back(rep.pairs().begin(), rep.pairs().end());
        }
        const LOColoredGraph colored(node_quotient(g, tree, id), std::move(basic), std::move(colors));
        const OrderedLOColoredGraph k =
            node.kind == NodeKind::prime ? canon_prime_colored(colored) : canon_complete_or_edgeless(colored);

        canon[id] = expand(k);
        for (vertex_t pos : k.origin) {
            const auto& part = sequence[node.children[pos]];
            sequence[id].insert(sequence[id].end(), part.begin(), part.end());
        }
    }

    std::vector<std::size_t> witness(g.order(), 0);
    const auto& order = sequence[MDTree::root];
    for (std::size_t i = 0; i < order.size(); ++i) witness[order[i]] = i + 1;
    Canon out{canon[MDTree::root], encode_representation(canon[MDTree::root]), std::move(witness)};
    if (!witness_is_isomorphism(g, out)) throw consistency_error("canon is not an ordered copy of its input");
    return out;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    const Canon ca = canonize(a);
    const Canon cb = canonize(b);
    return ca.representation == cb.representation;
}

}  // namespace modcanon
