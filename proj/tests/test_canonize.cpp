#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "modcanon/canonize.hpp"
#include "modcanon/cograph.hpp"
#include "test_support.hpp"

using namespace modcanon;
using namespace modcanon::testing;
using Pairs = std::vector<OrderedGraph::pair_type>;

TEST(BlockNumbering, Examples) {
    const BlockNumbering one({1, 1});
    EXPECT_EQ(one.nb(0, 1), 1u);
    const BlockNumbering two({2, 3});
    EXPECT_EQ(two.nb(1, 1), 3u);
    EXPECT_EQ(two.total(), 5u);
    EXPECT_THROW(two.nb(0, 3), invalid_input);
    EXPECT_THROW(two.nb(0, 0), invalid_input);
    EXPECT_THROW(two.nb(2, 1), invalid_input);
}

TEST(BlockNumbering, BijectiveAndIncreasing) {
    gen::Rng rng(71);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::size_t> sizes(1 + gen::uniform_below(rng, 8));
        for (auto& s : sizes) s = 1 + gen::uniform_below(rng, 6);
        const BlockNumbering nb(sizes);
        std::size_t expect = 1;
        for (std::size_t p = 0; p < sizes.size(); ++p)
            for (std::size_t i = 1; i <= sizes[p]; ++i) EXPECT_EQ(nb.nb(p, i), expect++);
        EXPECT_EQ(nb.total(), expect - 1);
    }
}

TEST(Expand, TwoAdjacentSingletons) {
    const LOColoredGraph h(complete(2), {0, 1, 2}, {{{1, 1}}, {{1, 1}}});
    EXPECT_EQ(expand(order_by(h, {0, 1})), OrderedGraph(2, {{1, 2}}));
}

TEST(Expand, SingleBlockWithInnerEdge) {
    const LOColoredGraph h(Graph(1), {0, 1, 2}, {{{1, 2}, {2, 1}, {2, 2}}});
    EXPECT_EQ(expand(order_by(h, {0})), OrderedGraph(2, {{1, 2}}));
}

TEST(Expand, JoinsBlocksAndKeepsInnerEdges) {
    // Blocks: ordered K2, single vertex, ordered edgeless pair; quotient path 0-1-2.
    const LOColoredGraph h(path(3), {0, 1, 2, 3}, {{{1, 2}, {2, 1}, {2, 2}}, {{1, 1}}, {{2, 2}}});
    EXPECT_EQ(expand(order_by(h, {0, 1, 2})), OrderedGraph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}}));
}

TEST(Expand, RejectsMalformedColor) {
    const LOColoredGraph h(Graph(1), {0, 1, 2}, {{{1, 2}, {2, 1}}});
    EXPECT_THROW(expand(order_by(h, {0})), invalid_input);
}

TEST(Canonize, SingleVertex) {
    const Canon c = canonize(Graph(1));
    EXPECT_EQ(c.ordered_graph, OrderedGraph(1));
    EXPECT_EQ(c.representation.pairs(), (Pairs{{1, 1}}));
    EXPECT_EQ(c.witness, (std::vector<std::size_t>{1}));
}

TEST(Canonize, AgreesWithCographCanonOnTwoEdges) {
    EXPECT_EQ(canonize(two_k2()).representation, canonize_cograph(two_k2()).representation);
    EXPECT_EQ(canonize(two_k2()).ordered_graph.edges(), (Pairs{{1, 2}, {3, 4}}));
}

TEST(Canonize, ExampleGraphGolden) {
    const Canon c = canonize(example_graph());
    EXPECT_TRUE(witness_is_isomorphism(example_graph(), c));
    EXPECT_EQ(c.ordered_graph.edges(), (Pairs{{1, 2}, {1, 3}, {1, 5}, {3, 5}, {4, 5}}));
}

TEST(Canonize, InvariantUnderAllRelabelingsSmallPermutationGraphs) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& p : perms) {
            const Graph g = gen::permutation_graph(p);
            const Canon c = canonize(g);
            EXPECT_TRUE(witness_is_isomorphism(g, c));
            for (const auto& q : perms) EXPECT_EQ(canonize(relabel(g, q)).representation, c.representation);
        }
    }
}

TEST(Canonize, InvariantUnderAllRelabelingsSampledSixVertexGraphs) {
    gen::Rng rng(72);
    const auto perms = all_permutations(6);
    for (int i = 0; i < 6; ++i) {
        const Graph g = gen::random_permutation_graph(6, rng);
        const Canon c = canonize(g);
        for (const auto& q : perms) EXPECT_EQ(canonize(relabel(g, q)).representation, c.representation);
    }
}

TEST(Canonize, EqualityMatchesIsomorphismOnCographsAndPermutationGraphs) {
    gen::Rng rng(73);
    std::vector<Graph> pool;
    for (int i = 0; i < 80; ++i) pool.push_back(gen::random_cograph(5 + gen::uniform_below(rng, 2), rng));
    for (int i = 0; i < 80; ++i) pool.push_back(gen::random_permutation_graph(5 + gen::uniform_below(rng, 2), rng));
    std::vector<Representation> reps;
    for (const auto& g : pool) reps.push_back(canonize(g).representation);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) EXPECT_EQ(reps[i] == reps[j], oracle::brute_iso(pool[i], pool[j]));
}

TEST(Canonize, LargerPermutationGraphsAndMixedTrees) {
    gen::Rng rng(74);
    for (int i = 0; i < 40; ++i) {
        // Prime permutation quotient with cograph and permutation-graph modules substituted in.
        const Graph g = disjoint_union(join(gen::random_permutation_graph(8, rng), gen::random_cograph(4, rng)),
                                       gen::random_permutation_graph(1 + gen::uniform_below(rng, 10), rng));
        const Canon c = canonize(g);
        EXPECT_TRUE(witness_is_isomorphism(g, c));
        for (int k = 0; k < 3; ++k) EXPECT_EQ(canonize(random_relabel(g, rng)).representation, c.representation);
    }
}

TEST(Canonize, UnsupportedPrimeQuotient) {
    EXPECT_THROW(canonize(cycle(5)), unsupported_class);
    EXPECT_THROW(canonize(join(cycle(5), Graph(1))), unsupported_class);
    EXPECT_THROW(isomorphic(cycle(5), cycle(5)), unsupported_class);
}

TEST(Canonize, Deterministic) {
    gen::Rng rng(75);
    const Graph g = gen::random_permutation_graph(12, rng);
    EXPECT_EQ(canon_text(canonize(g)), canon_text(canonize(g)));
}

TEST(Isomorphic, Examples) {
    gen::Rng rng(76);
    const Graph g = example_graph();
    EXPECT_TRUE(isomorphic(g, random_relabel(g, rng)));
    EXPECT_FALSE(isomorphic(path(4), star(3)));
    EXPECT_FALSE(isomorphic(path(4), path(3)));
    EXPECT_FALSE(isomorphic(two_k2(), cycle(4)));
}

TEST(CanonText, RoundTrip) {
    const Canon c = canonize(path(4));
    const std::string text = canon_text(c);
    EXPECT_EQ(text.substr(0, 2), "4\n");
    std::istringstream in(text);
    EXPECT_EQ(read_canon(in), c.representation);
    std::istringstream bad("3\n1 x\n");
    EXPECT_THROW(read_canon(bad), parse_error);
}
