#include <gtest/gtest.h>

#include <array>
#include <set>

#include "chromon/error.hpp"
#include "chromon/generators.hpp"
#include "chromon/partition.hpp"
#include "chromon/verify.hpp"
#include "chromon/weighted.hpp"
#include "support.hpp"

using namespace chromon;
using chromon::test::pig;

namespace {

std::vector<ForbiddenBlock> fbs(std::initializer_list<std::array<Weight, 3>> list) {
    std::vector<ForbiddenBlock> out;
    for (auto [right, size, ldist] : list) out.push_back({right, size, ldist});
    return out;
}

std::vector<Weight> as_weights(const std::vector<int>& v) { return {v.begin(), v.end()}; }

CanonicalPIG with_weights(const std::vector<int>& rmn, const std::vector<Weight>& w) {
    auto inst = instance_from_pig(pig_from_rmn(rmn));
    for (std::size_t i = 0; i < inst.items.size(); ++i) inst.items[i].weight = w[i];
    return build_canonical(inst);
}

}  // namespace

TEST(ZArray, Examples) {
    EXPECT_EQ(z_array(pig(test::kOverlap222)).z, (std::vector<Weight>{0, 2, 4, 6}));
    EXPECT_EQ(z_array(pig(test::kExample62)).z, (std::vector<Weight>{0, 1, 2, 3, 4, 5, 6, 7}));
    EXPECT_EQ(z_array(build_canonical(adversarial_family(2))).total(), 14);
}

TEST(ZArray, Owner) {
    const auto z = z_array(pig(test::kOverlap222));
    EXPECT_EQ(z.owner(1), 1);
    EXPECT_EQ(z.owner(2), 1);
    EXPECT_EQ(z.owner(3), 2);
    EXPECT_EQ(z.owner(6), 3);
}

TEST(Inlay, IntoEmptyList) {
    FBList f(20);
    f.inlay(10, 3, 0);
    EXPECT_EQ(f.blocks(), fbs({{10, 3, 0}}));
}

TEST(Inlay, TrimsRightOverlap) {
    FBList f(20);
    f.inlay(10, 3, 0);
    f.inlay(9, 4, 5);
    EXPECT_EQ(f.blocks(), fbs({{9, 4, 5}, {10, 1, 0}}));
}

TEST(Inlay, SwallowsAndTrims) {
    FBList f(20);
    f.inlay(10, 3, 0);
    f.inlay(6, 2, 0);
    f.inlay(9, 5, 0);
    EXPECT_EQ(f.blocks(), fbs({{9, 5, 0}, {10, 1, 0}}));
}

TEST(Inlay, DropsPartsBelowOne) {
    FBList f(20);
    EXPECT_EQ(f.inlay(0, 3, 0), -1);
    f.inlay(2, 5, 0);
    EXPECT_EQ(f.blocks(), fbs({{2, 2, 0}}));
}

TEST(Inlay, MatchesMarkedSetOracle) {
    Rng rng(3);
    for (int it = 0; it < 3000; ++it) {
        const Weight n = 30;
        FBList f(n);
        std::set<Weight> naive;
        Weight rt = n;
        for (int step = 0; step < 12; ++step) {
            rt -= static_cast<Weight>(rng() % 4);
            if (rt < 1) break;
            const Weight sz = 1 + static_cast<Weight>(rng() % 6);
            f.inlay(rt, sz, 0);
            for (Weight p = std::max<Weight>(1, rt - sz + 1); p <= rt; ++p) naive.insert(p);
            const auto got = f.positions();
            ASSERT_EQ(std::set<Weight>(got.begin(), got.end()), naive);
            const auto bs = f.blocks();
            for (std::size_t i = 1; i < bs.size(); ++i) ASSERT_LT(bs[i - 1].right, bs[i].left());
        }
    }
}

TEST(SplitMark, UnitWeightsMatchUnweighted) {
    const auto f = split_mark(pig(test::kExample62), 3);
    EXPECT_EQ(f.positions(), (std::vector<Weight>{1, 3, 4, 6}));
    const auto bs = f.blocks();
    for (std::size_t i = 1; i < bs.size(); ++i) EXPECT_LT(bs[i - 1].right, bs[i].left());
}

TEST(SplitMark, AdversarialCount) {
    for (int t = 2; t <= 20; ++t)
        EXPECT_EQ(split_mark(build_canonical(adversarial_family(t)), 2 * t).size(),
                  static_cast<std::size_t>(t * t + t + 1))
            << "t=" << t;
}

TEST(SplitMark, SingleHeavyVertex) {
    for (int c = 1; c <= 5; ++c) {
        const auto g = pig("a 1 2 " + std::to_string(c) + "\n");
        // lambda 1 forces one block: every copy but the last is forbidden
        std::vector<Weight> want;
        for (Weight p = 1; p < c; ++p) want.push_back(p);
        EXPECT_EQ(split_mark(g, c).positions(), want);
    }
}

TEST(SplitMark, WeightAboveCapacity) {
    EXPECT_THROW(split_mark(pig(test::kOverlap222), 1), WeightTooLargeError);
    EXPECT_THROW(solve_split(pig(test::kOverlap222), 1), WeightTooLargeError);
    EXPECT_THROW(two_approx_nonsplit(pig(test::kOverlap222), 1), WeightTooLargeError);
}

TEST(SplitPart, Examples) {
    const auto a = split_part(pig(test::kExample62), 3);
    ASSERT_TRUE(a);
    EXPECT_EQ(a->blocks, (std::vector<ExpandedBlock>{{1, 2}, {3, 5}, {6, 7}}));
    const auto b = split_part(pig(test::kOverlap222), 3);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->blocks, (std::vector<ExpandedBlock>{{1, 3}, {4, 6}}));
    EXPECT_EQ(b->lambda, 2);
    EXPECT_FALSE(split_part(pig(test::kExample61), 2));
}

TEST(SolveSplit, Overlap222) {
    const auto g = pig(test::kOverlap222);
    const auto s = solve_split(g, 3);
    EXPECT_EQ(s.coloring.lambda, 2);
    EXPECT_EQ(s.coloring.pieces[1], (std::vector<SplitPiece>{{1, 2}}));
    EXPECT_EQ(s.coloring.pieces[2], (std::vector<SplitPiece>{{1, 1}, {2, 1}}));
    EXPECT_EQ(s.coloring.pieces[3], (std::vector<SplitPiece>{{2, 2}}));
    EXPECT_TRUE(validate_split_coloring(g, s.coloring, 3, 2).ok());
}

TEST(SolveSplit, UnitWeightsEqualUnweighted) {
    const auto g = pig(test::kExample62);
    const auto s = solve_split(g, 3);
    const auto u = solve_unweighted(g, 3);
    ASSERT_EQ(s.partition.blocks.size(), u.blocks.size());
    for (std::size_t i = 0; i < u.blocks.size(); ++i) {
        EXPECT_EQ(s.partition.blocks[i].first, u.blocks[i].first);
        EXPECT_EQ(s.partition.blocks[i].last, u.blocks[i].last);
    }
    EXPECT_EQ(s.coloring.lambda, u.lambda);
}

TEST(SolveSplit, AdversarialT2) {
    const auto g = build_canonical(adversarial_family(2));
    EXPECT_TRUE(split_part(g, 4));
    EXPECT_EQ(solve_split(g, 4).coloring.lambda, 3);
    EXPECT_EQ(solve_unweighted(expand(g), 4).lambda, 3);
}

TEST(TwoApprox, Examples) {
    const auto g = pig(test::kOverlap222);
    const auto a = two_approx_nonsplit(g, 3);
    EXPECT_EQ(a.partition.blocks, test::blocks({{1, 1}, {2, 2}, {3, 3}}));
    EXPECT_EQ(a.partition.lambda, 3);
    EXPECT_EQ(a.split_lambda, 2);
    const auto b = two_approx_nonsplit(g, 4);
    EXPECT_EQ(b.partition.blocks, test::blocks({{1, 2}, {3, 3}}));
    EXPECT_EQ(b.partition.lambda, 2);
    EXPECT_EQ(brute_min_lambda_block(g, 3).lambda, 3);
    EXPECT_EQ(brute_min_lambda_block(g, 4).lambda, 2);
}

TEST(TwoApprox, UnitWeightsRatioOne) {
    const auto g = pig(test::kExample62);
    const auto a = two_approx_nonsplit(g, 3);
    EXPECT_EQ(a.partition.blocks, solve_unweighted(g, 3).blocks);
    EXPECT_EQ(a.partition.lambda, a.split_lambda);
}

TEST(Expand, CopiesAreMutuallyAdjacent) {
    const auto g = pig(test::kOverlap222);
    const auto x = expand(g);
    EXPECT_EQ(x.n, 6);
    EXPECT_EQ(x.omega, 6);
    const auto h = expand(pig("a 1 2 2\nb 5 6 3\n"));
    EXPECT_EQ(h.n, 5);
    EXPECT_EQ(h.components.size(), 2u);
}

TEST(SplitEquivalence, SmallExhaustive) {
    // n <= 5, weights <= C <= 3; the full n <= 8, C <= 4 sweep runs in the acceptance suite.
    for (int n = 1; n <= 5; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            for (int c = 1; c <= 3; ++c) {
                std::vector<Weight> w(n, 1);
                while (true) {
                    const auto g = with_weights(rmn, w);
                    const auto x = expand(g);
                    const auto marks = mark_forbidden(x, c).positions();
                    const auto fbl = split_mark(g, c).positions();
                    ASSERT_EQ(fbl, as_weights(marks));
                    const auto s = solve_split(g, c);
                    ASSERT_EQ(s.coloring.lambda, solve_unweighted(x, c).lambda);
                    ASSERT_TRUE(validate_split_coloring(g, s.coloring, c, s.coloring.lambda).ok());
                    const auto a = two_approx_nonsplit(g, c);
                    ASSERT_LE(a.partition.lambda, 2 * s.coloring.lambda);
                    ASSERT_TRUE(validate_blocks(g, a.partition, a.partition.lambda).ok());
                    ASSERT_TRUE(validate_coloring(g, a.coloring, c, a.partition.lambda).ok());
                    int i = 0;
                    while (i < n && w[i] == c) w[i++] = 1;
                    if (i == n) break;
                    ++w[i];
                }
            }
        });
}
