#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "modcanon/json_export.hpp"
#include "modcanon/modcanon.hpp"
#include "modcanon/oracle.hpp"

using namespace modcanon;
using nlohmann::json;

namespace {

struct Options {
    std::string format;  // "", "el" or "g6"
    bool json = false;
};

io::Format input_format(const Options& opt, const std::string& path) {
    if (opt.format == "g6") return io::Format::graph6;
    if (opt.format == "el") return io::Format::edge_list;
    return io::format_for_path(path);
}

// "-" reads standard input.
Graph load(const Options& opt, const std::string& path) {
    std::string text;
    if (path == "-")
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    else
        text = io::read_file(path);
    auto parsed = io::parse(text, input_format(opt, path));
    for (const auto& w : parsed.warnings) std::cerr << "modcanon: warning: " << path << ": " << w << '\n';
    return std::move(parsed.graph);
}

std::string sequence_text(const std::vector<vertex_t>& seq) {
    std::string out;
    for (vertex_t v : seq) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

int cmd_mdtree(const Options& opt, const std::string& path) {
    std::cout << to_json(md_tree(load(opt, path))).dump(2) << '\n';
    return 0;
}

int cmd_quotient(const Options& opt, const std::string& path) {
    const Quotient q = quotient(load(opt, path));
    if (opt.json) {
        json classes = json::array();
        for (const auto& c : q.classes) classes.push_back(c.members());
        json edges = json::array();
        for (const Edge& e : q.graph.edges()) edges.push_back({e.u, e.v});
        std::cout << json{{"n", q.graph.order()}, {"classes", classes}, {"edges", edges}}.dump(2) << '\n';
    } else {
        std::cout << io::serialize(q.graph, opt.format == "g6" ? io::Format::graph6 : io::Format::edge_list);
    }
    return 0;
}

int cmd_modules(const Options& opt, const std::string& path, std::optional<vertex_t> v, std::optional<vertex_t> w) {
    const Graph g = load(opt, path);
    const WedgeClasses wc(g);
    auto check = [&](vertex_t x) {
        if (x >= g.order()) throw invalid_input("vertex " + std::to_string(x) + " out of range");
    };
    if (w) {
        if (!v) throw invalid_input("-w requires -v");
        check(*v);
        check(*w);
        const VertexSet m = wc.spanned_module(*v, *w);
        if (opt.json)
            std::cout << json{{"v", *v}, {"w", *w}, {"module", m.members()}}.dump() << '\n';
        else
            std::cout << m.to_string() << '\n';
        return 0;
    }
    std::vector<vertex_t> pivots;
    if (v) {
        check(*v);
        pivots.push_back(*v);
    } else {
        for (vertex_t x = 0; x < g.order(); ++x) pivots.push_back(x);
    }
    json out = json::array();
    for (vertex_t p : pivots) {
        const auto chain = decomposition_chain(wc, weak_order_ranks(wc, p));
        if (opt.json) {
            json levels = json::array();
            for (const auto& s : chain) levels.push_back(s.members());
            out.push_back({{"v", p}, {"levels", levels}});
        } else {
            for (std::size_t i = 0; i < chain.size(); ++i) std::cout << p << ' ' << i << ' ' << chain[i].to_string() << '\n';
        }
    }
    if (opt.json) std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_cograph(const Options& opt, const std::string& path) {
    MDTree tree = md_tree(load(opt, path));
    if (auto p = first_prime_node(tree)) {
        std::cout << json{{"cograph", false}, {"witness", {{"id", *p}, {"vertices", tree.node(*p).vertices.members()}}}}.dump(2)
                  << '\n';
        return 1;
    }
    std::cout << to_json(Cotree(std::move(tree))).dump(2) << '\n';
    return 0;
}

int cmd_realizers(const Options& opt, const std::string& path) {
    const auto found = find_realizers(load(opt, path));
    if (opt.json) {
        json out = json::array();
        for (const auto& r : found) out.push_back({r.order1, r.order2});
        std::cout << out.dump() << '\n';
    } else if (found.empty()) {
        std::cout << "no realizer\n";
    } else {
        for (const auto& r : found) std::cout << sequence_text(r.order1) << " | " << sequence_text(r.order2) << '\n';
    }
    return found.empty() ? 1 : 0;
}

int cmd_canon(const Options& opt, const std::string& path) {
    const Canon c = canonize(load(opt, path));
    if (opt.json)
        std::cout << json{{"n", c.ordered_graph.order()}, {"representation", c.representation.pairs()}, {"witness", c.witness}}.dump()
                  << '\n';
    else
        write_canon(std::cout, c);
    return 0;
}

int cmd_iso(const Options& opt, const std::string& a, const std::string& b) {
    const bool same = isomorphic(load(opt, a), load(opt, b));
    std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
    return same ? 0 : 1;
}

int cmd_gen(const Options& opt, const std::string& kind, std::size_t n, std::uint64_t seed, double p) {
    if (n == 0) throw invalid_input("-n must be at least 1");
    gen::Rng rng(seed);
    Graph g(1);
    if (kind == "cograph")
        g = gen::random_cograph(n, rng);
    else if (kind == "perm")
        g = gen::random_permutation_graph(n, rng);
    else
        g = gen::random_graph(n, p, rng);
    std::cout << io::serialize(g, opt.format == "g6" ? io::Format::graph6 : io::Format::edge_list);
    return 0;
}

// Cross-checks the main algorithms against the exhaustive oracles on one small graph.
int cmd_certify(const Options& opt, const std::string& path) {
    const Graph g = load(opt, path);
    const std::size_t n = g.order();
    if (n > 8) throw size_guard_error("certify is limited to 8 vertices");
    const WedgeClasses wc(g);
    std::vector<std::string> failures;
    for (vertex_t v = 0; v < n; ++v)
        for (vertex_t w = 0; w < n; ++w)
            if (wc.spanned_module(v, w) != oracle::brute_min_module(g, v, w))
                failures.push_back("spanned module " + std::to_string(v) + " " + std::to_string(w));
    for (vertex_t v = 0; v < n; ++v) {
        const auto ranks = weak_order_ranks(wc, v);
        for (std::size_t i = 0; i <= ranks.class_count; ++i)
            if (decomposition_set(wc, ranks, i) != oracle::brute_decomposition_set(g, i, v))
                failures.push_back("decomposition level " + std::to_string(i) + " at " + std::to_string(v));
    }
    if (is_cograph(g) != oracle::brute_cograph(g)) failures.push_back("cograph recognition");
    try {
        const Canon c = canonize(g);
        if (!witness_is_isomorphism(g, c)) failures.push_back("canon witness");
        if (!oracle::brute_iso(g, c.ordered_graph.to_graph())) failures.push_back("canon isomorphism");
    } catch (const unsupported_class& e) {
        std::cout << "canon: skipped (" << e.what() << ")\n";
    }
    for (const auto& f : failures) std::cout << "FAIL " << f << '\n';
    std::cout << (failures.empty() ? "certified\n" : "not certified\n");
    return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular decomposition, cograph and permutation graph canonization"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Graph format, overriding the file extension")->check(CLI::IsMember({"el", "g6"}));
    app.add_flag("--json", opt.json, "JSON output where available");

    std::string g1, g2;
    auto* mdtree = app.add_subcommand("mdtree", "Print the modular decomposition tree as JSON");
    mdtree->add_option("graph", g1, "Input graph ('-' for stdin)")->required();

    auto* quot = app.add_subcommand("quotient", "Print the modular contraction as an edge list");
    quot->add_option("graph", g1, "Input graph")->required();

    std::optional<vertex_t> mv, mw;
    auto* modules = app.add_subcommand("modules", "Print every decomposition level, or the module spanned by a pair");
    modules->add_option("graph", g1, "Input graph")->required();
    modules->add_option("-v", mv, "Pivot vertex");
    modules->add_option("-w", mw, "Second vertex of the pair");

    auto* cog = app.add_subcommand("cograph", "Print the cotree, or the prime node that rules out a cograph");
    cog->add_option("graph", g1, "Input graph")->required();

    auto* real = app.add_subcommand("realizers", "Print every realizer of a prime permutation graph");
    real->add_option("graph", g1, "Input graph")->required();

    auto* canon = app.add_subcommand("canon", "Print the canonical representation");
    canon->add_option("graph", g1, "Input graph")->required();

    auto* iso = app.add_subcommand("iso", "Exit 0 if the graphs are isomorphic, 1 if not");
    iso->add_option("graph1", g1, "First graph")->required();
    iso->add_option("graph2", g2, "Second graph")->required();

    std::string kind;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double p = 0.5;
    auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
    gen->add_option("kind", kind, "cograph, perm or random")->required()->check(CLI::IsMember({"cograph", "perm", "random"}));
    gen->add_option("-n", n, "Vertex count")->required();
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("-p", p, "Edge probability for 'random'")->check(CLI::Range(0.0, 1.0));

    auto* certify = app.add_subcommand("certify", "");
    certify->group("");
    certify->add_option("graph", g1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*mdtree) return cmd_mdtree(opt, g1);
        if (*quot) return cmd_quotient(opt, g1);
        if (*modules) return cmd_modules(opt, g1, mv, mw);
        if (*cog) return cmd_cograph(opt, g1);
        if (*real) return cmd_realizers(opt, g1);
        if (*canon) return cmd_canon(opt, g1);
        if (*iso) return cmd_iso(opt, g1, g2);
        if (*gen) return cmd_gen(opt, kind, n, seed, p);
        if (*certify) return cmd_certify(opt, g1);
    } catch (const std::exception& e) {
        std::cerr << "modcanon: error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
