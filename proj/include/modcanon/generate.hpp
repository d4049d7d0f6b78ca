#pragma once

// Seeded instance generators.
//
// Streams come from std::mt19937_64, whose output sequence is fixed by the C++ standard. The standard
// distributions and std::shuffle are implementation-defined, so bounded draws, reals and shuffles are
// done here by hand. Changing any of them changes every generated corpus; bump generator_version then.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "modcanon/graph.hpp"

namespace modcanon::gen {

inline constexpr int generator_version = 1;

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Fisher-Yates, last position first.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

inline std::vector<vertex_t> random_permutation(std::size_t n, Rng& rng) {
    std::vector<vertex_t> p(n);
    std::iota(p.begin(), p.end(), vertex_t{0});
    shuffle(p, rng);
    return p;
}

/// Each pair independently adjacent with probability p.
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v)
            if (uniform_unit(rng) < p) edges.push_back({u, v});
    return Graph(n, edges);
}

/// Graph of a permutation: positions i < j are adjacent iff perm[i] > perm[j].
inline Graph permutation_graph(std::span<const vertex_t> perm) {
    std::vector<Edge> edges;
    for (vertex_t i = 0; i < perm.size(); ++i)
        for (vertex_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) edges.push_back({i, j});
    return Graph(perm.size(), edges);
}

/// Permutation graph from a random realizer, with vertex ids shuffled.
inline Graph random_permutation_graph(std::size_t n, Rng& rng) {
    const auto perm = random_permutation(n, rng);
    const auto names = random_permutation(n, rng);
    return relabel(permutation_graph(perm), names);
}

/// Cograph from a random binary union/join tree, with vertex ids shuffled.
inline Graph random_cograph(std::size_t n, Rng& rng) {
    std::vector<Edge> edges;
    struct Span {
        vertex_t lo, hi;
    };
    std::vector<Span> work{{0, n}};
    while (!work.empty()) {
        const Span s = work.back();
        work.pop_back();
        if (s.hi - s.lo < 2) continue;
        const vertex_t mid = s.lo + 1 + uniform_below(rng, s.hi - s.lo - 1);
        if (uniform_below(rng, 2) == 1)
            for (vertex_t a = s.lo; a < mid; ++a)
                for (vertex_t b = mid; b < s.hi; ++b) edges.push_back({a, b});
        work.push_back({s.lo, mid});
        work.push_back({mid, s.hi});
    }
    return relabel(Graph(n, edges), random_permutation(n, rng));
}

}  // namespace modcanon::gen
