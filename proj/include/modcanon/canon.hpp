#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"
#include "modcanon/representation.hpp"

namespace modcanon {

/// Canonical ordered copy of a graph on {1..n}.
///
/// witness[v] is the rank assigned to input vertex v; it is an isomorphism from the input onto
/// ordered_graph and is not part of the canonical value (two canons are equal iff their
/// representations are).
struct Canon {
    OrderedGraph ordered_graph;
    Representation representation;
    std::vector<std::size_t> witness;

    static Canon from_witness(const Graph& g, std::vector<std::size_t> witness) {
        std::vector<OrderedGraph::pair_type> edges;
        for (const Edge& e : g.edges()) edges.emplace_back(witness.at(e.u), witness.at(e.v));
        OrderedGraph og(g.order(), std::move(edges));
        Representation rep = encode_representation(og);
        return {std::move(og), std::move(rep), std::move(witness)};
    }

    friend bool operator==(const Canon& a, const Canon& b) { return a.representation == b.representation; }
};

/// True iff c.witness is a bijection onto {1..n} carrying g's edges exactly onto c's edges.
inline bool witness_is_isomorphism(const Graph& g, const Canon& c) {
    const std::size_t n = g.order();
    if (c.ordered_graph.order() != n || c.witness.size() != n) return false;
    std::vector<bool> hit(n + 1, false);
    for (std::size_t r : c.witness) {
        if (r < 1 || r > n || hit[r]) return false;
        hit[r] = true;
    }
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != c.ordered_graph.adjacent(c.witness[u], c.witness[v])) return false;
    return encode_representation(c.ordered_graph) == c.representation;
}

/// Stable text form: "n", then one "l1 l2" line per representation pair in sorted order.
inline void write_canon(std::ostream& os, const Canon& c) {
    os << c.ordered_graph.order() << '\n';
    for (auto [a, b] : c.representation.pairs()) os << a << ' ' << b << '\n';
}

inline std::string canon_text(const Canon& c) {
    std::ostringstream os;
    write_canon(os, c);
    return os.str();
}

/// Parses the text written by write_canon back into a representation; validates it decodes.
inline Representation read_canon(std::istream& is) {
    std::size_t n = 0;
    if (!(is >> n) || n == 0) throw parse_error("canon text: missing vertex count");
    std::vector<Representation::pair_type> pairs;
    std::size_t a = 0, b = 0;
    while (is >> a >> b) pairs.emplace_back(a, b);
    if (!is.eof()) throw parse_error("canon text: malformed pair line");
    Representation r(std::move(pairs));
    try {
        if (decode_representation(r).order() != n) throw parse_error("canon text: header disagrees with reflexive marker");
    } catch (const invalid_input& e) {
        throw parse_error(std::string("canon text: ") + e.what());
    }
    return r;
}

}  // namespace modcanon
