#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"

namespace modcanon {

/// Ordered graph on {1..n} with the natural order. Edges are stored as sorted pairs (l, l') with l < l'.
class OrderedGraph {
public:
    using pair_type = std::pair<std::size_t, std::size_t>;

    explicit OrderedGraph(std::size_t n, std::vector<pair_type> edges = {}) : n_(n), edges_(std::move(edges)) {
        if (n == 0) throw invalid_input("an ordered graph needs at least one vertex");
        for (auto& [a, b] : edges_) {
            if (a == b) throw invalid_input("self-loop in ordered graph");
            if (a < 1 || b < 1 || a > n || b > n) throw invalid_input("ordered graph vertex outside 1..n");
            if (a > b) std::swap(a, b);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    std::size_t order() const noexcept { return n_; }
    const std::vector<pair_type>& edges() const noexcept { return edges_; }

    bool adjacent(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), pair_type{a, b});
    }

    /// The same graph on 0-based ids (rank r becomes vertex r-1).
    Graph to_graph() const {
        std::vector<Edge> e;
        e.reserve(edges_.size());
        for (auto [a, b] : edges_) e.push_back({a - 1, b - 1});
        return Graph(n_, e);
    }

    /// Orders by vertex count, then by the sorted edge list.
    friend auto operator<=>(const OrderedGraph&, const OrderedGraph&) = default;

private:
    std::size_t n_;
    std::vector<pair_type> edges_;
};

/// Binary relation encoding an ordered graph: both orientations of every edge plus the single marker (n, n).
///
/// Pairs are kept sorted and unique, so equal relations compare equal element-wise.
class Representation {
public:
    using pair_type = std::pair<std::size_t, std::size_t>;

    Representation() = default;
    explicit Representation(std::vector<pair_type> pairs) : pairs_(std::move(pairs)) {
        std::sort(pairs_.begin(), pairs_.end());
        pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    }

    const std::vector<pair_type>& pairs() const noexcept { return pairs_; }
    bool contains(pair_type p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

    friend auto operator<=>(const Representation&, const Representation&) = default;

private:
    std::vector<pair_type> pairs_;
};

inline Representation encode_representation(const OrderedGraph& k) {
    std::vector<Representation::pair_type> pairs;
    pairs.reserve(2 * k.edges().size() + 1);
    for (auto [a, b] : k.edges()) {
        pairs.emplace_back(a, b);
        pairs.emplace_back(b, a);
    }
    pairs.emplace_back(k.order(), k.order());
    return Representation(std::move(pairs));
}

/// Vertex count encoded by r: the unique n with (n, n) in r.
inline std::size_t represented_order(const Representation& r) {
    std::size_t found = 0;
    std::size_t count = 0;
    for (auto [a, b] : r.pairs())
        if (a == b) {
            found = a;
            ++count;
        }
    if (count != 1)
        throw invalid_input("representation must carry exactly one reflexive pair, found " + std::to_string(count));
    if (found == 0) throw invalid_input("representation marker must be at least 1");
    return found;
}

inline OrderedGraph decode_representation(const Representation& r) {
    const std::size_t n = represented_order(r);
    std::vector<OrderedGraph::pair_type> edges;
    for (auto [a, b] : r.pairs()) {
        if (a == b) continue;
        if (a < 1 || b < 1 || a > n || b > n)
            throw invalid_input("pair (" + std::to_string(a) + "," + std::to_string(b) + ") exceeds the reflexive bound " + std::to_string(n));
        if (!r.contains({b, a}))
            throw invalid_input("representation is not symmetric at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a < b) edges.emplace_back(a, b);
    }
    return OrderedGraph(n, std::move(edges));
}

}  // namespace modcanon
