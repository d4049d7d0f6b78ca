#pragma once

// Exhaustive reference implementations for small graphs. They work on plain bitmasks and touch the
// graph only through order() and adjacent(), so agreement with the main algorithms is evidence rather
// than a restatement. Every entry point refuses inputs beyond its range.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"
#include "modcanon/realizer.hpp"

namespace modcanon::oracle {

using Mask = std::uint32_t;

namespace detail {

inline void guard(const Graph& g, std::size_t limit, const char* what) {
    if (g.order() > limit)
        throw size_guard_error(std::string(what) + " is limited to " + std::to_string(limit) + " vertices, got " + std::to_string(g.order()));
}

inline std::vector<Mask> adjacency(const Graph& g) {
    std::vector<Mask> adj(g.order(), 0);
    for (vertex_t u = 0; u < g.order(); ++u)
        for (vertex_t v = 0; v < g.order(); ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= Mask{1} << v;
    return adj;
}

inline bool module_within(const std::vector<Mask>& adj, Mask host, Mask m) {
    for (Mask rest = host & ~m; rest != 0; rest &= rest - 1) {
        const auto x = static_cast<std::size_t>(std::countr_zero(rest));
        const Mask seen = adj[x] & m;
        if (seen != 0 && seen != m) return false;
    }
    return true;
}

// Components of the subgraph induced by host (or of its complement within host).
inline std::vector<Mask> parts(const std::vector<Mask>& adj, Mask host, bool co) {
    std::vector<Mask> out;
    Mask left = host;
    while (left != 0) {
        Mask comp = left & (~left + 1);
        Mask frontier = comp;
        while (frontier != 0) {
            const auto x = static_cast<std::size_t>(std::countr_zero(frontier));
            frontier &= frontier - 1;
            const Mask nb = (co ? ~adj[x] & ~(Mask{1} << x) : adj[x]) & host & ~comp;
            comp |= nb;
            frontier |= nb;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

inline VertexSet to_set(std::size_t n, Mask m) {
    VertexSet s(n);
    for (vertex_t v = 0; v < n; ++v)
        if (m >> v & 1u) s.insert(v);
    return s;
}

inline Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (vertex_t v = 0; v < s.capacity(); ++v)
        if (s.contains(v)) m |= Mask{1} << v;
    return m;
}

}  // namespace detail

/// Every module of g, by testing all non-empty subsets. n <= 12.
inline std::vector<VertexSet> brute_modules(const Graph& g) {
    detail::guard(g, 12, "brute_modules");
    const std::size_t n = g.order();
    const auto adj = detail::adjacency(g);
    const Mask all = (Mask{1} << n) - 1;
    std::vector<VertexSet> out;
    for (Mask m = 1; m <= all; ++m)
        if (detail::module_within(adj, all, m)) out.push_back(detail::to_set(n, m));
    return out;
}

/// Intersection of all modules containing v and w. n <= 12.
inline VertexSet brute_min_module(const Graph& g, vertex_t v, vertex_t w) {
    detail::guard(g, 12, "brute_min_module");
    const std::size_t n = g.order();
    const auto adj = detail::adjacency(g);
    const Mask all = (Mask{1} << n) - 1;
    const Mask need = (Mask{1} << v) | (Mask{1} << w);
    Mask acc = all;
    for (Mask m = 1; m <= all; ++m)
        if ((m & need) == need && detail::module_within(adj, all, m)) acc &= m;
    return detail::to_set(n, acc);
}

/// Only the trivial modules exist. n <= 12.
inline bool brute_is_prime(const Graph& g) {
    detail::guard(g, 12, "brute_is_prime");
    const std::size_t n = g.order();
    const auto adj = detail::adjacency(g);
    const Mask all = (Mask{1} << n) - 1;
    for (Mask m = 1; m < all; ++m)
        if (std::popcount(m) > 1 && detail::module_within(adj, all, m)) return false;
    return true;
}

/// D_{G[host]}(v) by the three-way split; the connected case searches all proper submodules of host.
inline Mask brute_maximal_part(const std::vector<Mask>& adj, Mask host, vertex_t v) {
    const Mask vb = Mask{1} << v;
    if (std::popcount(host) == 1) return host;
    for (bool co : {false, true}) {
        const auto p = detail::parts(adj, host, co);
        if (p.size() > 1)
            for (Mask c : p)
                if (c & vb) return c;
    }
    Mask best = vb;
    for (Mask m = (host - 1) & host; m != 0; m = (m - 1) & host)
        if ((m & vb) && std::popcount(m) > std::popcount(best) && detail::module_within(adj, host, m)) best = m;
    return best;
}

/// D(level, v) through the recursion D(i+1,v) = D_{G[D(i,v)]}(v). n <= 12.
inline VertexSet brute_decomposition_set(const Graph& g, std::size_t level, vertex_t v) {
    detail::guard(g, 12, "brute_decomposition_set");
    const auto adj = detail::adjacency(g);
    Mask d = (Mask{1} << g.order()) - 1;
    for (std::size_t i = 0; i < level; ++i) d = brute_maximal_part(adj, d, v);
    return detail::to_set(g.order(), d);
}

/// Single vertices, closed under disjoint union and join. n <= 12.
inline bool brute_cograph(const Graph& g) {
    detail::guard(g, 12, "brute_cograph");
    const auto adj = detail::adjacency(g);
    auto rec = [&](auto&& self, Mask host) -> bool {
        if (std::popcount(host) == 1) return true;
        for (bool co : {false, true}) {
            const auto p = detail::parts(adj, host, co);
            if (p.size() > 1) return std::all_of(p.begin(), p.end(), [&](Mask c) { return self(self, c); });
        }
        return false;
    };
    return rec(rec, (Mask{1} << g.order()) - 1);
}

/// Tries every bijection. n <= 8.
inline bool brute_iso(const Graph& a, const Graph& b) {
    detail::guard(a, 8, "brute_iso");
    detail::guard(b, 8, "brute_iso");
    const std::size_t n = a.order();
    if (b.order() != n) return false;
    const auto aa = detail::adjacency(a);
    const auto bb = detail::adjacency(b);
    std::vector<vertex_t> p(n);
    std::iota(p.begin(), p.end(), vertex_t{0});
    do {
        bool ok = true;
        for (vertex_t u = 0; u < n && ok; ++u)
            for (vertex_t v = u + 1; v < n && ok; ++v) ok = ((aa[u] >> v) & 1u) == ((bb[p[u]] >> p[v]) & 1u);
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Lexicographically least adjacency bit string over all relabelings. n <= 8.
inline std::vector<bool> brute_canonical_code(const Graph& g) {
    detail::guard(g, 8, "brute_canonical_code");
    const std::size_t n = g.order();
    const auto adj = detail::adjacency(g);
    std::vector<vertex_t> p(n);
    std::iota(p.begin(), p.end(), vertex_t{0});
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        for (vertex_t u = 0; u < n; ++u)
            for (vertex_t v = u + 1; v < n; ++v) code.push_back((adj[p[u]] >> p[v]) & 1u);
        if (best.empty() || code < best) best = std::move(code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

/// All realizers, by pairing every vertex order with every other. n <= 6.
inline std::vector<Realizer> brute_realizer_search(const Graph& g) {
    detail::guard(g, 6, "brute_realizer_search");
    const std::size_t n = g.order();
    const auto adj = detail::adjacency(g);
    std::vector<std::vector<vertex_t>> orders;
    std::vector<vertex_t> p(n);
    std::iota(p.begin(), p.end(), vertex_t{0});
    do orders.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::vector<std::size_t>> pos(orders.size(), std::vector<std::size_t>(n));
    for (std::size_t k = 0; k < orders.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) pos[k][orders[k][i]] = i;

    std::vector<Realizer> out;
    for (std::size_t a = 0; a < orders.size(); ++a)
        for (std::size_t b = 0; b < orders.size(); ++b) {
            bool ok = true;
            for (vertex_t u = 0; u < n && ok; ++u)
                for (vertex_t v = u + 1; v < n && ok; ++v) {
                    const bool flipped = (pos[a][u] < pos[a][v]) != (pos[b][u] < pos[b][v]);
                    ok = flipped == (((adj[u] >> v) & 1u) != 0);
                }
            if (ok) out.push_back({orders[a], orders[b]});
        }
    return out;
}

}  // namespace modcanon::oracle
