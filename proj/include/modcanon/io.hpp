#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "modcanon/errors.hpp"
#include "modcanon/graph.hpp"

namespace modcanon::io {

struct ParseResult {
    Graph graph;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::uint64_t to_number(std::string_view tok, std::size_t line_no) {
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw parse_error("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + std::string(tok) + "'");
    return x;
}

}  // namespace detail

/// Edge-list text: a header line "n m" followed by m lines "u v" with 0-based ids.
/// Blank lines are ignored. Duplicate edges are dropped with a warning.
inline ParseResult parse_edge_list(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
    std::size_t line_no = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto toks = detail::split_ws(text.substr(pos, end - pos));
        if (!toks.empty()) lines.emplace_back(line_no, std::move(toks));
        pos = end + 1;
    }
    if (lines.empty()) throw parse_error("edge list: empty input");
    const auto& [hline, header] = lines.front();
    if (header.size() != 2) throw parse_error("edge list: header must be 'n m'");
    const std::uint64_t n = detail::to_number(header[0], hline);
    const std::uint64_t m = detail::to_number(header[1], hline);
    if (n == 0) throw parse_error("edge list: vertex count must be at least 1");
    if (lines.size() - 1 != m)
        throw parse_error("edge list: header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    std::vector<std::string> warnings;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [ln, toks] = lines[i];
        if (toks.size() != 2) throw parse_error("line " + std::to_string(ln) + ": expected 'u v'");
        const std::uint64_t u = detail::to_number(toks[0], ln);
        const std::uint64_t v = detail::to_number(toks[1], ln);
        if (u >= n || v >= n) throw parse_error("line " + std::to_string(ln) + ": vertex index out of range");
        if (u == v) throw parse_error("line " + std::to_string(ln) + ": self-loop");
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            warnings.push_back("duplicate edge " + std::to_string(sorted[i].u) + " " + std::to_string(sorted[i].v) + " ignored");
    return {Graph(n, edges), std::move(warnings)};
}

/// Header "n m" then edges in lexicographic order, one per line, smaller endpoint first.
inline std::string serialize_edge_list(const Graph& g) {
    const auto edges = g.edges();
    std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (const Edge& e : edges) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

namespace detail {
inline constexpr int g6_bias = 63;
}

/// graph6: size prefix, then the upper triangle column by column, six bits per printable byte.
inline std::string serialize_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    auto put6 = [&](std::uint64_t x, int groups) {
        for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(((x >> (6 * k)) & 0x3f) + detail::g6_bias));
    };
    if (n <= 62) {
        put6(n, 1);
    } else if (n <= 258047) {
        out.push_back('~');
        put6(n, 3);
    } else {
        out += "~~";
        put6(n, 6);
    }
    int filled = 0;
    unsigned acc = 0;
    for (vertex_t j = 1; j < n; ++j)
        for (vertex_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + detail::g6_bias));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::g6_bias));
    return out;
}

/// Parses one graph6 line. An optional ">>graph6<<" header and trailing whitespace are accepted.
inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    std::size_t pos = 0;
    auto take6 = [&]() -> std::uint64_t {
        if (pos >= text.size()) throw parse_error("graph6: input ends early");
        const int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte outside 63..126");
        return static_cast<std::uint64_t>(c - detail::g6_bias);
    };
    auto take_n = [&](int groups) {
        std::uint64_t x = 0;
        for (int k = 0; k < groups; ++k) x = (x << 6) | take6();
        return x;
    };
    if (text.empty()) throw parse_error("graph6: empty input");
    std::uint64_t n = 0;
    if (text[0] != '~') {
        n = take6();
    } else if (text.size() > 1 && text[1] == '~') {
        pos = 2;
        n = take_n(6);
    } else {
        pos = 1;
        n = take_n(3);
    }
    if (n == 0) throw parse_error("graph6: vertex count must be at least 1");
    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw parse_error("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " + std::to_string(text.size() - pos));
    std::vector<Edge> edges;
    std::uint64_t k = 0;
    std::uint64_t word = 0;
    for (vertex_t j = 1; j < n; ++j)
        for (vertex_t i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) word = take6();
            if ((word >> (5 - k % 6)) & 1u) edges.push_back({i, j});
        }
    if (bits % 6 != 0 && (word & ((1u << (6 - bits % 6)) - 1)) != 0) throw parse_error("graph6: padding bits must be zero");
    return Graph(n, edges);
}

enum class Format { edge_list, graph6 };

/// ".g6" selects graph6; everything else reads as an edge list.
inline Format format_for_path(std::string_view path) {
    return path.ends_with(".g6") ? Format::graph6 : Format::edge_list;
}

inline ParseResult parse(std::string_view text, Format f) {
    if (f == Format::graph6) return {parse_graph6(text), {}};
    return parse_edge_list(text);
}

inline std::string serialize(const Graph& g, Format f) {
    return f == Format::graph6 ? serialize_graph6(g) + "\n" : serialize_edge_list(g);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace modcanon::io
