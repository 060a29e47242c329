#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "chromon/error.hpp"
#include "chromon/generators.hpp"
#include "chromon/partition.hpp"
#include "chromon/verify.hpp"
#include "support.hpp"

using namespace chromon;
using chromon::test::pig;

namespace {

bool has_kind(const ValidationReport& r, const std::string& kind) {
    return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

// Overlap graph of closed intervals, for the non-proper example.
Graph interval_graph(const std::vector<std::pair<int, int>>& iv) {
    Graph g(static_cast<int>(iv.size()));
    for (std::size_t i = 0; i < iv.size(); ++i) {
        g.weight[i] = 1;
        for (std::size_t j = i + 1; j < iv.size(); ++j)
            if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second) g.add_edge(i, j);
    }
    return g;
}

}  // namespace

TEST(Chromons, Basic) {
    const auto g = pig(test::kExample62);
    Coloring one;
    one.color.assign(g.n + 1, 1);
    one.lambda = 1;
    EXPECT_EQ(chromons_of(g, one).size(), 1u);
    Coloring proper;
    proper.color = {0, 1, 2, 3, 4, 5, 6, 7};
    proper.lambda = 7;
    EXPECT_EQ(chromons_of(g, proper).size(), 7u);
}

TEST(Validate, SizeViolations) {
    const auto g62 = pig(test::kExample62);
    const BlockPartition too_big{{{1, 4}, {5, 7}}, 3, 2};
    const auto r = validate_blocks(g62, too_big, 2);
    EXPECT_FALSE(r.ok());
    EXPECT_TRUE(has_kind(r, "size"));

    const auto g61 = pig(test::kExample61);
    const BlockPartition single{{{1, 3}}, 2, 1};
    EXPECT_TRUE(has_kind(validate_blocks(g61, single, 1), "size"));
    Coloring all_one{{0, 1, 1, 1}, 1};
    EXPECT_TRUE(has_kind(validate_coloring(g61, all_one, 2, 1), "size"));
}

TEST(Validate, SolverOutputOk) {
    const auto g = pig(test::kExample62);
    const auto p = solve_unweighted(g, 3);
    EXPECT_TRUE(validate_blocks(g, p, 2).ok());
    EXPECT_TRUE(has_kind(validate_blocks(g, p, 1), "clique-intersection"));
    const BlockPartition gap{{{1, 2}, {4, 7}}, 4, 2};
    EXPECT_TRUE(has_kind(validate_blocks(g, gap, 2), "contiguity"));
}

TEST(Validate, DisconnectedPart) {
    const auto g = Graph::from_pig(pig(test::kExample62));
    GeneralPartition p;
    p.part_of = {0, 1, 1, 1, 1, 1, 0};  // {a, g} is not connected
    p.parts = 2;
    EXPECT_TRUE(has_kind(validate_partition(g, g.maximal_cliques(), p, 5, 2), "connectedness"));
}

TEST(BlockOracle, Examples) {
    EXPECT_EQ(brute_min_lambda_block(pig(test::kExample62), 3).lambda, 2);
    EXPECT_EQ(brute_min_lambda_block(pig(test::kExample61), 2).lambda, 2);
    EXPECT_EQ(brute_min_lambda_block(pig("a 1 2\n"), 1).lambda, 1);
}

TEST(GeneralOracle, NonProperExample) {
    // a=[1,9] b=[2,5] c=[3,6] d=[4,12] e=[7,10] f=[8,11], C = 2.
    const auto g = interval_graph({{1, 9}, {2, 5}, {3, 6}, {4, 12}, {7, 10}, {8, 11}});
    const auto cliques = g.maximal_cliques();
    EXPECT_EQ(cliques.size(), 2u);
    const auto general = brute_min_lambda_general(g, cliques, 2);
    EXPECT_EQ(general.lambda, 2);
    EXPECT_TRUE(validate_partition(g, cliques, general.witness, 2, 2).ok());
    // Every partition into consecutive pairs/singletons in this order meets some clique 3 times.
    int best = 99;
    std::vector<int> part_of(6);
    std::function<void(int, int)> rec = [&](int v, int parts) {
        if (v == 6) {
            GeneralPartition p{part_of, parts};
            if (validate_partition(g, cliques, p, 2, 99).ok()) best = std::min(best, clique_intersection(cliques, p));
            return;
        }
        part_of[v] = parts;
        rec(v + 1, parts + 1);
        if (v + 1 < 6) {
            part_of[v + 1] = parts;
            rec(v + 2, parts + 1);
        }
    };
    rec(0, 0);
    EXPECT_EQ(best, 3);
}

TEST(GeneralOracle, EdgelessUnitCapacity) {
    EXPECT_EQ(brute_min_lambda_general(pig("a 1 2\nb 4 5\nc 7 8\n"), 1).lambda, 1);
}

TEST(GeneralOracle, EqualsBlockOracleOnSmallPigs) {
    for (int n = 1; n <= 7; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            for (int c = 1; c <= 3; ++c)
                ASSERT_EQ(brute_min_lambda_general(g, c).lambda, brute_min_lambda_block(g, c).lambda);
        });
}

TEST(Oracles, Guards) {
    const auto big = build_canonical(banded_instance(15, 2));
    EXPECT_THROW(brute_min_lambda_block(big, 2), GuardError);
    EXPECT_THROW(brute_min_lambda_general(big, 2), GuardError);
    EXPECT_THROW(brute_min_colors(Graph::from_pig(big), 2), GuardError);
}

TEST(MinColors, EqualsPartitionOptimum) {
    for (int n = 1; n <= 7; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            const auto graph = Graph::from_pig(g);
            for (int c = 1; c <= 3; ++c) ASSERT_EQ(brute_min_colors(graph, c), solve_unweighted(g, c).lambda);
        });
}

TEST(Blockify, ContiguousUnchanged) {
    const auto g = pig(test::kExample62);
    GeneralPartition p{{0, 0, 1, 1, 1, 2, 2}, 3};
    const auto b = blockify_partition(g, p, 3);
    EXPECT_EQ(b.partition.blocks, test::blocks({{1, 2}, {3, 5}, {6, 7}}));
    EXPECT_EQ(b.rounds, 0);
}

TEST(Blockify, OracleWitnessesBecomeBlocks) {
    for (int n = 1; n <= 8; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            for (int c = 1; c <= 3; ++c) {
                const auto general = brute_min_lambda_general(g, c);
                const auto b = blockify_partition(g, general.witness, c);
                ASSERT_LE(b.rounds, n);
                ASSERT_TRUE(validate_blocks(g, b.partition, general.lambda).ok());
            }
        });
}

TEST(Blockify, ScatteredRandomPartitions) {
    Rng rng(4);
    int done = 0;
    while (done < 500) {
        const auto g = build_canonical(random_proper_instance(2 + static_cast<int>(rng() % 8), 3, rng));
        if (!g.connected()) continue;
        const auto graph = Graph::from_pig(g);
        const int c = 1 + static_cast<int>(rng() % 3);
        // Random connected parts of size <= C by greedy growth from random seeds.
        GeneralPartition p;
        p.part_of.assign(g.n, -1);
        std::vector<int> order(g.n);
        for (int i = 0; i < g.n; ++i) order[i] = i;
        std::shuffle(order.begin(), order.end(), rng);
        for (int seed : order) {
            if (p.part_of[seed] >= 0) continue;
            const int id = p.parts++;
            std::vector<int> members{seed};
            p.part_of[seed] = id;
            for (std::size_t i = 0; i < members.size() && static_cast<int>(members.size()) < c; ++i)
                for (int nb : graph.neighbours(members[i]))
                    if (p.part_of[nb] < 0 && static_cast<int>(members.size()) < c && rng() % 2) {
                        p.part_of[nb] = id;
                        members.push_back(nb);
                    }
        }
        const auto cliques = graph.maximal_cliques();
        const int lambda = clique_intersection(cliques, p);
        ASSERT_TRUE(validate_partition(graph, cliques, p, c, lambda).ok());
        const auto b = blockify_partition(g, p, c);
        ASSERT_LE(b.rounds, g.n);
        ASSERT_TRUE(validate_blocks(g, b.partition, lambda).ok());
        ++done;
    }
}
