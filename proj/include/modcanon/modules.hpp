#pragma once

#include <compare>
#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"

namespace modcanon {

/// True iff every vertex outside m sees either all of m or none of it.
inline bool is_module(const Graph& g, const VertexSet& m) {
    if (m.capacity() != g.order()) throw invalid_input("vertex set does not belong to this graph");
    if (m.empty()) throw invalid_input("a module must be non-empty");
    const std::size_t size = m.size();
    for (vertex_t v = 0; v < g.order(); ++v) {
        if (m.contains(v)) continue;
        const VertexSet seen = g.neighbors(v) & m;
        const std::size_t k = seen.size();
        if (k != 0 && k != size) return false;
    }
    return true;
}

/// Whether edges e and f of g form a wedge: they share exactly one endpoint and
/// their other endpoints are non-adjacent.
inline bool wedge(const Graph& g, Edge e, Edge f) {
    if (!g.adjacent(e.u, e.v) || !g.adjacent(f.u, f.v)) throw invalid_input("wedge is defined on edges only");
    auto other = [](Edge x, vertex_t shared) { return x.u == shared ? x.v : x.u; };
    for (vertex_t shared : {e.u, e.v}) {
        if (shared != f.u && shared != f.v) continue;
        const vertex_t a = other(e, shared);
        const vertex_t b = other(f, shared);
        if (a == b) return false;  // e == f
        return !g.adjacent(a, b);
    }
    return false;
}

enum class PairSide : unsigned char { edge, non_edge };

/// Identifies the wedge class of a vertex pair: an edge class of G or of its complement.
struct WedgeClassId {
    PairSide side = PairSide::edge;
    std::size_t class_index = 0;
    friend auto operator<=>(const WedgeClassId&, const WedgeClassId&) = default;
};

/// Wedge classes of every pair of distinct vertices, with the vertex union of each class.
///
/// Classes are the connected components of the wedge relation on E(G) and, separately, on E(complement).
/// The traversal generates wedge neighbours of a pair from its two endpoints' rows, so the relation on
/// pairs is never materialized. Built once per graph, read-only afterwards.
class WedgeClasses {
public:
    explicit WedgeClasses(const Graph& g) : n_(g.order()), slot_(n_ * n_, no_class) {
        traverse(g, PairSide::edge);
        traverse(g, PairSide::non_edge);
    }

    std::size_t order() const noexcept { return n_; }

    std::size_t class_count(PairSide side) const noexcept { return side == PairSide::edge ? edge_classes_ : classes_.size() - edge_classes_; }

    WedgeClassId class_of(vertex_t v, vertex_t w) const {
        return classes_[slot(v, w)].id;
    }

    /// Union of all pairs in the class.
    const VertexSet& span(WedgeClassId id) const {
        const std::size_t offset = id.side == PairSide::edge ? 0 : edge_classes_;
        if (id.class_index >= class_count(id.side)) throw invalid_input("unknown wedge class");
        return classes_[offset + id.class_index].members;
    }

    /// Smallest module containing v and w: {v} if v == w, else the span of the pair's wedge class.
    VertexSet spanned_module(vertex_t v, vertex_t w) const {
        if (v >= n_ || w >= n_) throw invalid_input("vertex outside graph");
        if (v == w) return VertexSet::singleton(n_, v);
        return classes_[slot(v, w)].members;
    }

private:
    static constexpr std::size_t no_class = static_cast<std::size_t>(-1);

    struct Class {
        WedgeClassId id;
        VertexSet members;
    };

    std::size_t slot(vertex_t v, vertex_t w) const {
        if (v >= n_ || w >= n_ || v == w) throw invalid_input("wedge classes are defined on pairs of distinct vertices");
        return slot_[v * n_ + w];
    }

    void traverse(const Graph& g, PairSide side) {
        // same[x]: partners of x on this side (neighbours in G, or in the complement).
        std::vector<VertexSet> same;
        same.reserve(n_);
        for (vertex_t x = 0; x < n_; ++x) {
            if (side == PairSide::edge) {
                same.push_back(g.neighbors(x));
            } else {
                VertexSet s = g.neighbors(x).complement();
                s.erase(x);
                same.push_back(std::move(s));
            }
        }
        std::size_t index = 0;
        for (vertex_t u = 0; u < n_; ++u) {
            same[u].for_each([&](vertex_t v) {
                if (v <= u || slot_[u * n_ + v] != no_class) return;
                const std::size_t cls = classes_.size();
                classes_.push_back({{side, index++}, VertexSet(n_)});
                VertexSet& members = classes_.back().members;
                std::deque<Edge> queue{{u, v}};
                assign(u, v, cls);
                while (!queue.empty()) {
                    auto [a, b] = queue.front();
                    queue.pop_front();
                    members.insert(a);
                    members.insert(b);
                    // {x, c} wedges {x, y} when c pairs with x on this side but not with y.
                    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                        VertexSet cand = same[x] - same[y];
                        cand.erase(y);
                        cand.for_each([&](vertex_t c) {
                            if (slot_[x * n_ + c] != no_class) return;
                            assign(x, c, cls);
                            queue.push_back({x, c});
                        });
                    }
                }
            });
        }
        if (side == PairSide::edge) edge_classes_ = classes_.size();
    }

    void assign(vertex_t a, vertex_t b, std::size_t cls) {
        slot_[a * n_ + b] = cls;
        slot_[b * n_ + a] = cls;
    }

    std::size_t n_;
    std::vector<std::size_t> slot_;
    std::vector<Class> classes_;
    std::size_t edge_classes_ = 0;
};

inline WedgeClasses wedge_classes(const Graph& g) { return WedgeClasses(g); }

/// One-shot spanned module. Callers issuing many queries should hold a WedgeClasses instead.
inline VertexSet spanned_module(const Graph& g, vertex_t v, vertex_t w) { return WedgeClasses(g).spanned_module(v, w); }

}  // namespace modcanon
