#include <gtest/gtest.h>

#include "modcanon/decomposition.hpp"
#include "modcanon/modules.hpp"
#include "test_support.hpp"

using namespace modcanon;
using namespace modcanon::testing;

TEST(MaximalProperModule, Examples) {
    EXPECT_EQ(maximal_proper_module_of(Graph(1), 0), VertexSet::full(1));
    for (vertex_t v = 0; v < 3; ++v) EXPECT_EQ(maximal_proper_module_of(complete(3), v), VertexSet::singleton(3, v));
    for (vertex_t v = 0; v < 4; ++v) EXPECT_EQ(maximal_proper_module_of(path(4), v), VertexSet::singleton(4, v));
    EXPECT_EQ(maximal_proper_module_of(two_k2(), 3), VertexSet::of(4, {2, 3}));
}

TEST(MaximalProperModule, MatchesBruteForceSplit) {
    for (const Graph& g : random_corpus(150, 8, 31))
        for (vertex_t v = 0; v < g.order(); ++v)
            EXPECT_EQ(maximal_proper_module_of(g, v), oracle::brute_decomposition_set(g, 1, v));
}

TEST(WeakOrder, Examples) {
    EXPECT_EQ(weak_order_compare(path(3), 0, 0, 1), WeakOrder::greater);
    EXPECT_EQ(weak_order_compare(path(3), 0, 1, 1), WeakOrder::incomparable);
    EXPECT_EQ(weak_order_compare(two_k2(), 0, 1, 2), WeakOrder::greater);
    EXPECT_EQ(weak_order_compare(two_k2(), 0, 2, 1), WeakOrder::less);
    EXPECT_EQ(weak_order_compare(two_k2(), 0, 2, 3), WeakOrder::incomparable);
}

TEST(WeakOrderRanks, SingleVertex) {
    const auto r = weak_order_ranks(Graph(1), 0);
    EXPECT_EQ(r.rank, (std::vector<std::size_t>{0}));
    EXPECT_EQ(r.class_count, 1u);
}

TEST(WeakOrderRanks, TwoEdges) {
    const auto r = weak_order_ranks(two_k2(), 0);
    EXPECT_EQ(r.rank, (std::vector<std::size_t>{2, 1, 0, 0}));
    EXPECT_EQ(r.class_count, 3u);
}

TEST(WeakOrderRanks, StrictWeakOrderWithPivotOnTop) {
    for (const Graph& g : random_corpus(150, 9, 32)) {
        const WedgeClasses wc(g);
        for (vertex_t v = 0; v < g.order(); ++v) {
            const auto r = weak_order_ranks(wc, v);
            EXPECT_EQ(r.rank[v], r.class_count - 1);
            std::vector<bool> used(r.class_count, false);
            for (vertex_t w = 0; w < g.order(); ++w) {
                used[r.rank[w]] = true;
                if (w != v) { EXPECT_LT(r.rank[w], r.class_count - 1); }
            }
            for (bool u : used) EXPECT_TRUE(u);
            for (vertex_t a = 0; a < g.order(); ++a) {
                EXPECT_NE(weak_order_compare(wc, v, a, a), WeakOrder::less);
                for (vertex_t b = 0; b < g.order(); ++b)
                    for (vertex_t x = 0; x < g.order(); ++x) {
                        const auto ab = weak_order_compare(wc, v, a, b);
                        const auto bx = weak_order_compare(wc, v, b, x);
                        const auto ax = weak_order_compare(wc, v, a, x);
                        if (ab == WeakOrder::less && bx == WeakOrder::less) { EXPECT_EQ(ax, WeakOrder::less); }
                        if (ab == WeakOrder::incomparable && bx == WeakOrder::incomparable) { EXPECT_EQ(ax, WeakOrder::incomparable); }
                    }
            }
        }
    }
}

TEST(WeakOrderRanks, RankIsLevelWhereVertexLeavesTheChain) {
    for (const Graph& g : random_corpus(120, 8, 33))
        for (vertex_t v = 0; v < g.order(); ++v) {
            const auto r = weak_order_ranks(g, v);
            for (std::size_t i = 0; i < g.order(); ++i) {
                const VertexSet di = oracle::brute_decomposition_set(g, i, v);
                const VertexSet next = oracle::brute_decomposition_set(g, i + 1, v);
                (di - next).for_each([&](vertex_t w) { EXPECT_EQ(r.rank[w], i); });
            }
        }
}

TEST(DecompositionSet, Examples) {
    for (vertex_t v = 0; v < 5; ++v) {
        EXPECT_EQ(decomposition_set(example_graph(), 0, v), VertexSet::full(5));
        EXPECT_EQ(decomposition_set(example_graph(), 5, v), VertexSet::singleton(5, v));
    }
    EXPECT_EQ(decomposition_set(two_k2(), 1, 0), VertexSet::of(4, {0, 1}));
    EXPECT_EQ(decomposition_set(two_k2(), 2, 0), VertexSet::of(4, {0}));
    EXPECT_THROW(decomposition_set(two_k2(), 5, 0), invalid_input);
}

TEST(DecompositionSet, MatchesRecursiveDefinition) {
    for (const Graph& g : random_corpus(200, 8, 34)) {
        const WedgeClasses wc(g);
        for (vertex_t v = 0; v < g.order(); ++v) {
            const auto r = weak_order_ranks(wc, v);
            for (std::size_t i = 0; i <= g.order(); ++i)
                EXPECT_EQ(decomposition_set(wc, r, i), oracle::brute_decomposition_set(g, i, v)) << "level " << i << " v " << v;
        }
    }
}

TEST(DecompositionSet, LevelsPartitionAndChainsShrink) {
    for (const Graph& g : random_corpus(150, 9, 35)) {
        const std::size_t n = g.order();
        const WedgeClasses wc(g);
        std::vector<WeakOrderRank> ranks;
        for (vertex_t v = 0; v < n; ++v) ranks.push_back(weak_order_ranks(wc, v));
        for (std::size_t i = 0; i <= n; ++i) {
            std::vector<VertexSet> sets;
            for (vertex_t v = 0; v < n; ++v) sets.push_back(decomposition_set(wc, ranks[v], i));
            for (vertex_t v = 0; v < n; ++v)
                for (vertex_t w = 0; w < n; ++w)
                    if (sets[v].contains(w)) {
                        EXPECT_EQ(sets[v], sets[w]);
                    } else {
                        EXPECT_FALSE(sets[v].intersects(sets[w]));
                    }
            if (i > 0) {
                for (vertex_t v = 0; v < n; ++v) EXPECT_TRUE(sets[v].is_subset_of(decomposition_set(wc, ranks[v], i - 1)));
            }
        }
        for (vertex_t v = 0; v < n; ++v) {
            const auto chain = decomposition_chain(wc, ranks[v]);
            EXPECT_EQ(chain.front(), g.all_vertices());
            EXPECT_EQ(chain.back(), VertexSet::singleton(n, v));
        }
    }
}

TEST(MDTree, SingleVertex) {
    const MDTree t = md_tree(Graph(1));
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t.node(0).kind, NodeKind::leaf);
}

TEST(MDTree, TwoEdges) {
    const MDTree t = md_tree(two_k2());
    ASSERT_EQ(t.size(), 7u);
    EXPECT_EQ(t.node(0).kind, NodeKind::parallel);
    ASSERT_EQ(t.node(0).children.size(), 2u);
    for (std::size_t c : t.node(0).children) {
        EXPECT_EQ(t.node(c).kind, NodeKind::series);
        EXPECT_EQ(t.node(c).children.size(), 2u);
    }
    EXPECT_EQ(t.node(t.node(0).children[1]).vertices, VertexSet::of(4, {2, 3}));
}

TEST(MDTree, PathIsPrime) {
    const MDTree t = md_tree(path(4));
    ASSERT_EQ(t.size(), 5u);
    EXPECT_EQ(t.node(0).kind, NodeKind::prime);
    EXPECT_EQ(t.node(0).children, (std::vector<std::size_t>{1, 2, 3, 4}));
    for (vertex_t v = 0; v < 4; ++v) EXPECT_EQ(t.node(t.leaf_of(v)).vertices, VertexSet::singleton(4, v));
}

TEST(MDTree, ShapeInvariants) {
    for (const Graph& g : random_corpus(200, 10, 36)) {
        const MDTree t = md_tree(g);
        EXPECT_EQ(t.node(MDTree::root).vertices, g.all_vertices());
        std::size_t leaves = 0;
        for (std::size_t id = 0; id < t.size(); ++id) {
            const MDNode& node = t.node(id);
            EXPECT_TRUE(is_module(g, node.vertices));
            if (node.children.empty()) {
                ++leaves;
                EXPECT_EQ(node.kind, NodeKind::leaf);
                EXPECT_EQ(node.vertices.size(), 1u);
                continue;
            }
            VertexSet seen(g.order());
            vertex_t last_min = 0;
            for (std::size_t k = 0; k < node.children.size(); ++k) {
                const MDNode& ch = t.node(node.children[k]);
                EXPECT_EQ(ch.parent, id);
                EXPECT_FALSE(ch.vertices.intersects(seen));
                if (k > 0) { EXPECT_GT(ch.vertices.min(), last_min); }
                last_min = ch.vertices.min();
                seen |= ch.vertices;
            }
            EXPECT_EQ(seen, node.vertices);
            const Graph sub = induced_subgraph(g, node.vertices).graph;
            const bool disc = !is_connected(sub);
            const bool codisc = !is_connected(complement(sub));
            EXPECT_EQ(node.kind == NodeKind::parallel, disc);
            EXPECT_EQ(node.kind == NodeKind::series, codisc);
            EXPECT_EQ(node.kind == NodeKind::prime, !disc && !codisc);
            if (node.kind == NodeKind::prime && node.children.size() <= 8) {
                EXPECT_TRUE(oracle::brute_is_prime(node_quotient(g, t, id)));
            }
        }
        EXPECT_EQ(leaves, g.order());
        const auto post = t.postorder();
        EXPECT_EQ(post.size(), t.size());
        EXPECT_EQ(post.back(), MDTree::root);
    }
}

TEST(Quotient, Examples) {
    EXPECT_EQ(quotient(two_k2()).graph, edgeless(2));
    EXPECT_EQ(quotient(complete(3)).graph, complete(3));
    EXPECT_EQ(quotient(path(4)).graph, path(4));
    const Quotient q = quotient(two_k2());
    EXPECT_EQ(q.class_map, (std::vector<std::size_t>{0, 0, 1, 1}));
}

TEST(Quotient, RepresentativesInduceIt) {
    for (const Graph& g : random_corpus(200, 10, 37)) {
        const Quotient q = quotient(g);
        const std::size_t k = q.graph.order();
        if (g.order() > 1) {
            const std::size_t m = q.graph.edge_count();
            const bool prime = k >= 4 && oracle::brute_is_prime(q.graph);
            EXPECT_TRUE(m == 0 || m == k * (k - 1) / 2 || prime);
        }
        // Any choice of representatives induces the quotient.
        gen::Rng rng(k);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<vertex_t> reps;
            for (const auto& cls : q.classes) {
                const auto mem = cls.members();
                reps.push_back(mem[gen::uniform_below(rng, mem.size())]);
            }
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b) EXPECT_EQ(q.graph.adjacent(a, b), g.adjacent(reps[a], reps[b]));
        }
    }
}
