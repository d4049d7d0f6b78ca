#include <gtest/gtest.h>

#include <set>

#include "modcanon/cograph.hpp"
#include "test_support.hpp"

using namespace modcanon;
using namespace modcanon::testing;

TEST(Rng, EngineMatchesStandardSequence) {
    // The standard fixes the 10000th output of a default-constructed mt19937_64.
    gen::Rng rng;
    rng.discard(9999);
    EXPECT_EQ(rng(), 9981545732273789042ull);
}

TEST(Rng, UniformBelowStaysInRange) {
    gen::Rng rng(81);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[gen::uniform_below(rng, 7)];
    for (int h : hits) EXPECT_GT(h, 800);
    for (int i = 0; i < 1000; ++i) {
        const double u = gen::uniform_unit(rng);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(Rng, ShuffleIsPermutation) {
    gen::Rng rng(82);
    const auto p = gen::random_permutation(20, rng);
    EXPECT_EQ(std::set<vertex_t>(p.begin(), p.end()).size(), 20u);
}

TEST(Generators, DeterministicForSeed) {
    gen::Rng r1(83), r2(83);
    EXPECT_EQ(gen::random_permutation_graph(15, r1), gen::random_permutation_graph(15, r2));
    EXPECT_EQ(gen::random_cograph(15, r1), gen::random_cograph(15, r2));
    EXPECT_EQ(gen::random_graph(15, 0.4, r1), gen::random_graph(15, 0.4, r2));
}

TEST(Generators, GoldenStreams) {
    gen::Rng rng(1);
    EXPECT_EQ(gen::random_permutation(6, rng), (std::vector<vertex_t>{1, 3, 0, 4, 5, 2}));
}

TEST(Generators, PermutationGraphsHaveRealizers) {
    gen::Rng rng(84);
    for (int i = 0; i < 100; ++i) {
        const Graph g = gen::random_permutation_graph(1 + gen::uniform_below(rng, 6), rng);
        EXPECT_FALSE(oracle::brute_realizer_search(g).empty());
    }
}

TEST(Generators, CographsAreCographs) {
    gen::Rng rng(85);
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(oracle::brute_cograph(gen::random_cograph(1 + gen::uniform_below(rng, 12), rng)));
}

TEST(Generators, EdgeProbabilityExtremes) {
    gen::Rng rng(86);
    EXPECT_EQ(gen::random_graph(8, 0.0, rng), edgeless(8));
    EXPECT_EQ(gen::random_graph(8, 1.0, rng), complete(8));
}
