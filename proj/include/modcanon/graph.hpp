#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "modcanon/errors.hpp"

namespace modcanon {

using vertex_t = std::size_t;

inline constexpr vertex_t no_vertex = std::numeric_limits<vertex_t>::max();

/// Subset of the vertex ids {0..capacity-1} of some host graph.
///
/// Bitset semantics: equality, inclusion and intersection are word-parallel. Two sets
/// are only comparable when they share a capacity.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static VertexSet full(std::size_t capacity) {
        VertexSet s(capacity);
        for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet singleton(std::size_t capacity, vertex_t v) {
        VertexSet s(capacity);
        s.insert(v);
        return s;
    }

    static VertexSet of(std::size_t capacity, std::initializer_list<vertex_t> members) {
        VertexSet s(capacity);
        for (vertex_t v : members) s.insert(v);
        return s;
    }

    std::size_t capacity() const noexcept { return capacity_; }

    void insert(vertex_t v) {
        check(v);
        words_[v / 64] |= bit(v);
    }
    void erase(vertex_t v) {
        check(v);
        words_[v / 64] &= ~bit(v);
    }
    bool contains(vertex_t v) const noexcept {
        return v < capacity_ && (words_[v / 64] & bit(v)) != 0;
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    /// Smallest member, or no_vertex for the empty set.
    vertex_t min() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
        return no_vertex;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<vertex_t> members() const {
        std::vector<vertex_t> out;
        out.reserve(size());
        for_each([&](vertex_t v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_capacity(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_capacity(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same_capacity(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement relative to {0..capacity-1}.
    VertexSet complement() const {
        VertexSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        same_capacity(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        same_capacity(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool is_proper_subset_of(const VertexSet& o) const { return is_subset_of(o) && *this != o; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Orders first by capacity, then by the sorted member list. Used for deterministic output only.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.capacity_ != b.capacity_) return a.capacity_ < b.capacity_;
        return a.members() < b.members();
    }

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<std::size_t>{}(capacity_);
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](vertex_t v) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        });
        return out + "}";
    }

private:
    static constexpr std::uint64_t bit(vertex_t v) noexcept { return std::uint64_t{1} << (v % 64); }
    void check(vertex_t v) const {
        if (v >= capacity_) throw invalid_input("vertex " + std::to_string(v) + " outside set capacity " + std::to_string(capacity_));
    }
    void same_capacity(const VertexSet& o) const {
        if (o.capacity_ != capacity_) throw invalid_input("vertex sets over different hosts");
    }
    void trim() noexcept {
        if (capacity_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
        if (capacity_ == 0) words_.clear();
    }

    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

/// Undirected edge; graphs always report edges with u < v.
struct Edge {
    vertex_t u = 0;
    vertex_t v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on the vertex ids 0..n-1, n >= 1.
///
/// Immutable once built. Duplicate edges collapse; self-loops and out-of-range ids are rejected.
class Graph {
public:
    explicit Graph(std::size_t n, std::span<const Edge> edges = {}) : n_(n) {
        if (n == 0) throw invalid_input("a graph needs at least one vertex");
        adj_.assign(n, VertexSet(n));
        for (const Edge& e : edges) {
            if (e.u >= n || e.v >= n)
                throw invalid_input("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} outside 0.." + std::to_string(n - 1));
            if (e.u == e.v) throw invalid_input("self-loop at vertex " + std::to_string(e.u));
            adj_[e.u].insert(e.v);
            adj_[e.v].insert(e.u);
        }
    }
    Graph(std::size_t n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept {
        std::size_t d = 0;
        for (const auto& row : adj_) d += row.size();
        return d / 2;
    }

    bool adjacent(vertex_t u, vertex_t v) const noexcept { return u < n_ && adj_[u].contains(v); }
    const VertexSet& neighbors(vertex_t v) const { return adj_.at(v); }
    std::size_t degree(vertex_t v) const { return adj_.at(v).size(); }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    /// Edges sorted lexicographically, each with u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (vertex_t u = 0; u < n_; ++u)
            adj_[u].for_each([&](vertex_t v) {
                if (u < v) out.push_back({u, v});
            });
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_;
    std::vector<VertexSet> adj_;
};

/// The graph on the same vertices whose edges are exactly the non-edges of g.
inline Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.push_back({u, v});
    return Graph(n, edges);
}

/// G[s] together with the bijection between s and {0..|s|-1}. Local ids follow host id order.
struct InducedSubgraph {
    Graph graph;
    std::vector<vertex_t> to_host;   // local id -> host id
    std::vector<vertex_t> to_local;  // host id -> local id, no_vertex outside s

    VertexSet lift(const VertexSet& local) const {
        VertexSet out(to_local.size());
        local.for_each([&](vertex_t v) { out.insert(to_host[v]); });
        return out;
    }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.capacity() != g.order()) throw invalid_input("vertex set does not belong to this graph");
    if (s.empty()) throw invalid_input("induced subgraph of the empty set");
    std::vector<vertex_t> to_host = s.members();
    std::vector<vertex_t> to_local(g.order(), no_vertex);
    for (vertex_t i = 0; i < to_host.size(); ++i) to_local[to_host[i]] = i;
    std::vector<Edge> edges;
    for (vertex_t i = 0; i < to_host.size(); ++i)
        for (vertex_t j = i + 1; j < to_host.size(); ++j)
            if (g.adjacent(to_host[i], to_host[j])) edges.push_back({i, j});
    return {Graph(to_host.size(), edges), std::move(to_host), std::move(to_local)};
}

namespace detail {

// Components of g (or of its complement) restricted to `within`, ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within, bool co) {
    std::vector<VertexSet> out;
    VertexSet unseen = within;
    while (!unseen.empty()) {
        vertex_t start = unseen.min();
        VertexSet comp(g.order());
        std::vector<vertex_t> stack{start};
        unseen.erase(start);
        comp.insert(start);
        while (!stack.empty()) {
            vertex_t u = stack.back();
            stack.pop_back();
            VertexSet next = co ? unseen - g.neighbors(u) : unseen & g.neighbors(u);
            next.for_each([&](vertex_t w) {
                stack.push_back(w);
                comp.insert(w);
            });
            unseen -= next;
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace detail

/// Connected components, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) { return detail::components_within(g, g.all_vertices(), false); }

/// Connected components of the complement, computed without materializing it.
inline std::vector<VertexSet> co_components(const Graph& g) { return detail::components_within(g, g.all_vertices(), true); }

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

/// Copy of g where vertex v is renamed to perm[v]. perm must be a permutation of 0..n-1.
inline Graph relabel(const Graph& g, std::span<const vertex_t> perm) {
    if (perm.size() != g.order()) throw invalid_input("relabeling has wrong length");
    std::vector<bool> hit(perm.size(), false);
    for (vertex_t p : perm) {
        if (p >= perm.size() || hit[p]) throw invalid_input("relabeling is not a permutation");
        hit[p] = true;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Graph(g.order(), edges);
}

}  // namespace modcanon
