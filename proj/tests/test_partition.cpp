#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "chromon/generators.hpp"
#include "chromon/partition.hpp"
#include "chromon/verify.hpp"
#include "support.hpp"

using namespace chromon;
using chromon::test::blocks;
using chromon::test::pig;

TEST(Bounds, Examples) {
    EXPECT_EQ(lower_bound(2, 2), 1);
    EXPECT_EQ(lower_bound(1, 1), 1);
    EXPECT_EQ(lower_bound(5, 3), 2);
    EXPECT_EQ(upper_bound(5, 3), 3);
    EXPECT_EQ(upper_bound(4, 3), 2);  // omega = 1 mod C: bounds meet
    EXPECT_EQ(upper_bound(2, 2), 2);
}

TEST(SimplePart, Example62) {
    const auto p = simple_part(pig(test::kExample62), 3);
    EXPECT_EQ(p.blocks, blocks({{1, 3}, {4, 6}, {7, 7}}));
    EXPECT_EQ(p.lambda, 3);
}

TEST(SimplePart, SingleVertex) {
    const auto p = simple_part(pig("a 1 2\n"), 5);
    EXPECT_EQ(p.blocks, blocks({{1, 1}}));
    EXPECT_EQ(p.lambda, 1);
}

TEST(SimplePart, Path4) {
    const auto p = simple_part(pig_from_rmn({0, 2, 3, 4, 4}), 2);
    EXPECT_EQ(p.blocks, blocks({{1, 2}, {3, 4}}));
    EXPECT_EQ(p.lambda, 2);
}

TEST(SimplePart, RestartsAtComponents) {
    const auto p = simple_part(pig("a 1 2\nb 2 3\nc 3 4\nd 10 11\ne 11 12\n"), 2);
    EXPECT_EQ(p.blocks, blocks({{1, 2}, {3, 3}, {4, 5}}));
}

TEST(MarkForbidden, Example62) {
    const auto m = mark_forbidden(pig(test::kExample62), 3);
    EXPECT_EQ(m.k, 1);
    EXPECT_EQ(m.positions(), (std::vector<int>{1, 3, 4, 6}));
}

TEST(MarkForbidden, Example61) {
    const auto m = mark_forbidden(pig(test::kExample61), 2);
    EXPECT_EQ(m.k, 0);
    EXPECT_EQ(m.positions(), (std::vector<int>{1, 2}));
}

TEST(MarkForbidden, K2) {
    const auto m = mark_forbidden(pig_from_rmn({0, 2, 2}), 2);
    EXPECT_EQ(m.positions(), (std::vector<int>{1}));
}

TEST(MarkForbidden, LastVertexNeverForbiddenAndRnfBelow) {
    for (int n = 1; n <= 9; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            for (int c = 1; c <= 4; ++c) {
                const auto m = mark_forbidden(g, c);
                ASSERT_FALSE(m.forbidden[n]);
                for (int i = 1; i <= n; ++i) {
                    const int r = m.rnf[i];
                    ASSERT_LE(r, i);
                    for (int j = r + 1; j <= i; ++j) ASSERT_TRUE(m.forbidden[j]);
                }
            }
        });
}

TEST(CombPart, Example62) {
    const auto p = comb_part(pig(test::kExample62), 3);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->blocks, blocks({{1, 2}, {3, 5}, {6, 7}}));
    EXPECT_EQ(p->lambda, 2);
}

TEST(CombPart, Example61Infeasible) { EXPECT_FALSE(comb_part(pig(test::kExample61), 2)); }

TEST(CombPart, K1) {
    const auto p = comb_part(pig("a 1 2\n"), 1);
    ASSERT_TRUE(p);
    EXPECT_EQ(p->blocks, blocks({{1, 1}}));
    EXPECT_EQ(p->lambda, 1);
}

TEST(SolveUnweighted, Examples) {
    EXPECT_EQ(solve_unweighted(pig(test::kExample61), 2).lambda, 2);
    const auto p = solve_unweighted(pig(test::kExample62), 3);
    EXPECT_EQ(p.lambda, 2);
    EXPECT_EQ(p.blocks, blocks({{1, 2}, {3, 5}, {6, 7}}));
}

TEST(SolveUnweighted, CapacityAtLeastN) {
    const auto g = pig("a 1 3\nb 2 4\nc 3 5\nd 20 21\ne 21 22\n");
    const auto p = solve_unweighted(g, 5);
    EXPECT_EQ(p.lambda, 1);
    EXPECT_EQ(p.blocks, blocks({{1, 3}, {4, 5}}));
}

TEST(SolveUnweighted, EmptyInstance) {
    const auto p = solve_unweighted(pig(""), 3);
    EXPECT_TRUE(p.blocks.empty());
    EXPECT_EQ(p.lambda, 0);
}

TEST(PartitionToColoring, Example62) {
    const auto g = pig(test::kExample62);
    const auto c = partition_to_coloring(solve_unweighted(g, 3), g);
    EXPECT_EQ(std::vector<int>(c.color.begin() + 1, c.color.end()), (std::vector<int>{1, 1, 2, 2, 2, 1, 1}));
    const auto s = partition_to_coloring(simple_part(g, 3), g);
    EXPECT_EQ(std::vector<int>(s.color.begin() + 1, s.color.end()), (std::vector<int>{1, 1, 1, 2, 2, 2, 3}));
    EXPECT_EQ(s.lambda, 3);
    // chromons are the blocks
    auto ch = chromons_of(g, c);
    std::sort(ch.begin(), ch.end());
    EXPECT_EQ(ch, (std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}, {6, 7}}));
}

TEST(PartitionToColoring, SingleBlock) {
    const auto g = pig("a 1 3\nb 2 4\n");
    const auto c = partition_to_coloring(solve_unweighted(g, 2), g);
    EXPECT_EQ(c.color[1], 1);
    EXPECT_EQ(c.color[2], 1);
}

namespace {

// Every block partition of [1, n] with parts <= C and clique intersection <= target.
void each_block_partition(const CanonicalPIG& g, int capacity, int target,
                          const std::function<void(const std::vector<Block>&)>& fn) {
    std::vector<Block> cur;
    std::function<void(int)> rec = [&](int start) {
        if (start > g.n) {
            if (clique_intersection(g, cur) <= target) fn(cur);
            return;
        }
        for (int end = start; end <= std::min(g.n, start + capacity - 1); ++end) {
            cur.push_back({start, end});
            rec(end + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

}  // namespace

TEST(MarkForbidden, SoundAgainstEnumeratedPartitions) {
    // No block of a [k+1, C]-block partition ends at a forbidden vertex.
    for (int n = 2; n <= 9; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            for (int c = 1; c <= 4; ++c) {
                const auto m = mark_forbidden(g, c);
                each_block_partition(g, c, g.k(c) + 1, [&](const std::vector<Block>& bs) {
                    for (const auto& b : bs) ASSERT_FALSE(m.forbidden[b.last]) << "n=" << n << " C=" << c;
                });
            }
        });
}

TEST(MarkForbidden, MatchesDefinitionFixpoint) {
    for (int n = 1; n <= 10; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            for (int c = 1; c <= 4; ++c) {
                const auto algo = mark_forbidden(g, c).positions();
                const auto def = forbidden_fixpoint(g, c);
                ASSERT_TRUE(std::includes(algo.begin(), algo.end(), def.begin(), def.end()));
                if (comb_part(g, c)) ASSERT_EQ(algo, def) << "n=" << n << " C=" << c;
            }
        });
}

TEST(SolveUnweighted, MatchesBlockOracleUpTo10) {
    for (int n = 1; n <= 10; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            for (int c = 1; c <= 4; ++c) {
                const auto p = solve_unweighted(g, c);
                ASSERT_EQ(p.lambda, brute_min_lambda_block(g, c).lambda);
                ASSERT_TRUE(validate_blocks(g, p, p.lambda).ok());
                ASSERT_TRUE(validate_coloring(g, partition_to_coloring(p, g), c, p.lambda).ok());
            }
        });
}

TEST(SolveUnweighted, SandwichOnRandomInstances) {
    Rng rng(5);
    for (int it = 0; it < 2000; ++it) {
        const int n = 1 + static_cast<int>(rng() % 120);
        const int c = 1 + static_cast<int>(rng() % 6);
        const auto g = build_canonical(random_proper_instance(n, 1 + static_cast<int>(rng() % 8), rng));
        const auto p = solve_unweighted(g, c);
        ASSERT_GE(p.lambda, lower_bound(g.omega, c));
        ASSERT_LE(p.lambda, upper_bound(g.omega, c));
        if (g.omega % c == 1 % c) ASSERT_EQ(p.lambda, lower_bound(g.omega, c));
        ASSERT_TRUE(validate_blocks(g, p, p.lambda).ok());
    }
}
