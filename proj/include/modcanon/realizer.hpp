#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"

namespace modcanon {

/// Binary relation on {0..n-1} stored as one bitset row per element.
class Relation {
public:
    explicit Relation(std::size_t n = 0) : rows_(n, VertexSet(n)) {}

    /// Relation of a sequence read as a strict linear order (earlier < later).
    static Relation from_sequence(std::span<const vertex_t> seq) {
        Relation r(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i)
            for (std::size_t j = i + 1; j < seq.size(); ++j) r.insert(seq[i], seq[j]);
        return r;
    }

    std::size_t order() const noexcept { return rows_.size(); }
    bool contains(vertex_t a, vertex_t b) const { return rows_.at(a).contains(b); }
    void insert(vertex_t a, vertex_t b) { rows_.at(a).insert(b); }
    const VertexSet& successors(vertex_t a) const { return rows_.at(a); }
    VertexSet& successors(vertex_t a) { return rows_.at(a); }

    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& r : rows_) s += r.size();
        return s;
    }

    bool is_subset_of(const Relation& o) const {
        for (std::size_t a = 0; a < rows_.size(); ++a)
            if (!rows_[a].is_subset_of(o.rows_.at(a))) return false;
        return true;
    }

    std::vector<std::pair<vertex_t, vertex_t>> pairs() const {
        std::vector<std::pair<vertex_t, vertex_t>> out;
        for (vertex_t a = 0; a < rows_.size(); ++a) rows_[a].for_each([&](vertex_t b) { out.emplace_back(a, b); });
        return out;
    }

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::vector<VertexSet> rows_;
};

struct RelationPair {
    Relation first;
    Relation second;

    explicit RelationPair(std::size_t n = 0) : first(n), second(n) {}
    RelationPair(Relation a, Relation b) : first(std::move(a)), second(std::move(b)) {}

    Relation& operator[](int i) { return i == 0 ? first : second; }
    const Relation& operator[](int i) const { return i == 0 ? first : second; }

    friend bool operator==(const RelationPair&, const RelationPair&) = default;
};

inline bool is_irreflexive(const Relation& r) {
    for (vertex_t a = 0; a < r.order(); ++a)
        if (r.contains(a, a)) return false;
    return true;
}

inline bool is_transitive(const Relation& r) {
    for (vertex_t a = 0; a < r.order(); ++a) {
        bool ok = true;
        r.successors(a).for_each([&](vertex_t b) { ok = ok && r.successors(b).is_subset_of(r.successors(a)); });
        if (!ok) return false;
    }
    return true;
}

/// Irreflexive, transitive, and incomparability is transitive.
inline bool is_strict_weak_order(const Relation& r) {
    if (!is_irreflexive(r) || !is_transitive(r)) return false;
    const std::size_t n = r.order();
    auto incomparable = [&](vertex_t a, vertex_t b) { return !r.contains(a, b) && !r.contains(b, a); };
    for (vertex_t a = 0; a < n; ++a)
        for (vertex_t b = 0; b < n; ++b) {
            if (!incomparable(a, b)) continue;
            for (vertex_t c = 0; c < n; ++c)
                if (incomparable(b, c) && !incomparable(a, c)) return false;
        }
    return true;
}

inline bool is_strict_linear_order(const Relation& r) {
    if (!is_irreflexive(r) || !is_transitive(r)) return false;
    for (vertex_t a = 0; a < r.order(); ++a)
        for (vertex_t b = a + 1; b < r.order(); ++b)
            if (r.contains(a, b) == r.contains(b, a)) return false;
    return true;
}

/// Closure under the edge relation: u<v in one relation forces v<u in the other when {u,v} is an
/// edge, and u<v in the other when it is not. One pass suffices: applying the rules twice
/// returns to the original pair.
inline RelationPair closure_under_E(const Graph& g, const RelationPair& p) {
    const std::size_t n = g.order();
    if (p.first.order() != n || p.second.order() != n) throw invalid_input("relation pair does not match graph");
    RelationPair out = p;
    for (int i = 0; i < 2; ++i) {
        Relation& other = out[1 - i];
        for (vertex_t u = 0; u < n; ++u) {
            const VertexSet& succ = p[i].successors(u);
            (succ & g.neighbors(u)).for_each([&](vertex_t v) { other.insert(v, u); });
            other.successors(u) |= succ - g.neighbors(u);
        }
    }
    return out;
}

inline Relation transitive_closure(Relation r) {
    const std::size_t n = r.order();
    for (vertex_t k = 0; k < n; ++k)
        for (vertex_t a = 0; a < n; ++a)
            if (r.contains(a, k)) r.successors(a) |= r.successors(k);
    return r;
}

inline RelationPair transitive_pair_closure(const RelationPair& p) {
    return {transitive_closure(p.first), transitive_closure(p.second)};
}

/// Every iterate of the realizer construction anchored at w, from the seed ({(w,v)}, {}) up to the
/// first repeated pair. The last element is the fixed point.
inline std::vector<RelationPair> realizer_iterates(const Graph& g, vertex_t w) {
    const std::size_t n = g.order();
    if (w >= n) throw invalid_input("anchor vertex outside graph");
    RelationPair seed(n);
    for (vertex_t v = 0; v < n; ++v)
        if (v != w) seed.first.insert(w, v);
    std::vector<RelationPair> iterates{std::move(seed)};
    // Every non-final step adds at least one of the 2n^2 possible pairs.
    const std::size_t bound = 2 * n * n + 1;
    while (true) {
        RelationPair next = transitive_pair_closure(closure_under_E(g, iterates.back()));
        if (next == iterates.back()) break;
        iterates.push_back(std::move(next));
        if (iterates.size() > bound) throw consistency_error("realizer iteration failed to stabilize");
    }
    return iterates;
}

inline RelationPair realizer_fixpoint(const Graph& g, vertex_t w) { return realizer_iterates(g, w).back(); }

/// Both relations are strict linear orders and a pair is an edge iff the two orders disagree on it.
inline bool check_realizer(const Graph& g, const RelationPair& p) {
    const std::size_t n = g.order();
    if (p.first.order() != n || p.second.order() != n) return false;
    if (!is_strict_linear_order(p.first) || !is_strict_linear_order(p.second)) return false;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != (p.first.contains(u, v) != p.second.contains(u, v))) return false;
    return true;
}

/// A realizer as two vertex sequences, earliest first.
struct Realizer {
    std::vector<vertex_t> order1;
    std::vector<vertex_t> order2;

    friend auto operator<=>(const Realizer&, const Realizer&) = default;

    RelationPair relations() const { return {Relation::from_sequence(order1), Relation::from_sequence(order2)}; }
};

/// Lists the elements of a strict linear order from least to greatest.
inline std::vector<vertex_t> linear_sequence(const Relation& r) {
    std::vector<std::pair<std::size_t, vertex_t>> by_rank;
    for (vertex_t a = 0; a < r.order(); ++a) by_rank.emplace_back(r.order() - 1 - r.successors(a).size(), a);
    std::sort(by_rank.begin(), by_rank.end());
    std::vector<vertex_t> seq;
    for (auto [rank, a] : by_rank) seq.push_back(a);
    return seq;
}

/// Runs the fixpoint from every anchor and keeps the distinct results that are realizers.
///
/// On a prime permutation graph this yields its (at most four) realizers. An empty result is read as
/// "not a permutation graph"; that reading is checked against exhaustive search on small graphs,
/// not proven.
inline std::vector<Realizer> find_realizers(const Graph& g) {
    std::vector<Realizer> out;
    for (vertex_t w = 0; w < g.order(); ++w) {
        const RelationPair p = realizer_fixpoint(g, w);
        if (!check_realizer(g, p)) continue;
        Realizer r{linear_sequence(p.first), linear_sequence(p.second)};
        if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace modcanon
