#include <gtest/gtest.h>

#include "chromon/error.hpp"
#include "chromon/generators.hpp"
#include "chromon/pig.hpp"
#include "support.hpp"

using namespace chromon;
using chromon::test::pig;

TEST(ParseInstance, UnitWeightsByDefault) {
    const auto inst = parse_instance(test::kExample61);
    ASSERT_EQ(inst.size(), 3u);
    EXPECT_EQ(inst.items[1].id, "b");
    EXPECT_EQ(inst.items[1].left, 2);
    EXPECT_EQ(inst.items[1].right, 5);
    EXPECT_TRUE(inst.unit_weights());
}

TEST(ParseInstance, SingleItem) {
    const auto inst = parse_instance("a 1 2");
    ASSERT_EQ(inst.size(), 1u);
    EXPECT_EQ(inst.items[0].weight, 1);
}

TEST(ParseInstance, WeightsRoundTrip) {
    const auto inst = parse_instance(test::kOverlap222);
    for (const auto& it : inst.items) EXPECT_EQ(it.weight, 2);
    EXPECT_EQ(format_instance(inst), test::kOverlap222);
    EXPECT_EQ(format_instance(parse_instance(format_instance(inst))), test::kOverlap222);
}

TEST(ParseInstance, CommentsAndBlankLines) {
    const auto inst = parse_instance("# header\n\na 1 3  # trailing\n   \nb 2 4\n");
    EXPECT_EQ(inst.size(), 2u);
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    EXPECT_EQ(line_of("a 1 3\nb 5 2\n"), 2u);        // left >= right
    EXPECT_EQ(line_of("a 1 3\n\na 2 4\n"), 3u);      // duplicate id
    EXPECT_EQ(line_of("a 1 3 0\n"), 1u);             // weight < 1
    EXPECT_EQ(line_of("a 1\n"), 1u);                 // too few fields
    EXPECT_EQ(line_of("a 1 x\n"), 1u);               // not an integer
    EXPECT_EQ(line_of("a 1 3 1 9\n"), 1u);           // too many fields
}

TEST(BuildCanonical, Example62Cliques) {
    const auto g = pig(test::kExample62);
    ASSERT_EQ(g.n, 7);
    EXPECT_EQ(g.cliques, test::blocks({{1, 5}, {3, 7}}));
    EXPECT_EQ(g.omega, 5);
    EXPECT_TRUE(g.connected());
}

TEST(BuildCanonical, SingleInterval) {
    const auto g = pig("a 0 1\n");
    EXPECT_EQ(g.cliques, test::blocks({{1, 1}}));
    EXPECT_EQ(g.omega, 1);
}

TEST(BuildCanonical, ContainmentIsRejected) {
    try {
        pig("a 1 9\nb 2 5\n");
        FAIL() << "expected NotProperError";
    } catch (const NotProperError& e) {
        EXPECT_EQ(e.outer(), "a");
        EXPECT_EQ(e.inner(), "b");
    }
    EXPECT_THROW(pig("a 1 5\nb 1 7\n"), NotProperError);  // equal left, longer right
    EXPECT_THROW(pig("a 1 7\nb 3 7\n"), NotProperError);  // equal right, shorter
}

TEST(BuildCanonical, IdenticalIntervalsAllowed) {
    const auto g = pig("a 1 4\nb 1 4\nc 3 6\n");
    EXPECT_EQ(g.omega, 3);
    EXPECT_TRUE(g.is_edge(1, 2));
}

TEST(BuildCanonical, OrderSortsByLeftThenRight) {
    const auto inst = parse_instance("c 5 9\na 1 3\nb 0 2\n");
    const auto g = build_canonical(inst);
    EXPECT_EQ(inst.items[g.order[0]].id, "b");
    EXPECT_EQ(inst.items[g.order[1]].id, "a");
    EXPECT_EQ(inst.items[g.order[2]].id, "c");
}

TEST(BuildCanonical, SharedEndpointsTouch) {
    // Closed intervals: [1,3] and [3,5] share the point 3.
    const auto g = pig("a 1 3\nb 3 5\nc 6 8\n");
    EXPECT_TRUE(g.is_edge(1, 2));
    EXPECT_FALSE(g.is_edge(2, 3));
    EXPECT_EQ(g.components, test::blocks({{1, 2}, {3, 3}}));
}

TEST(IsEdge, Example62) {
    const auto g = pig(test::kExample62);
    EXPECT_TRUE(g.is_edge(1, 5));   // a, e
    EXPECT_FALSE(g.is_edge(2, 6));  // b, f
    EXPECT_FALSE(g.is_edge(4, 4));
    EXPECT_THROW(g.is_edge(0, 3), std::out_of_range);
    EXPECT_THROW(g.is_edge(1, 8), std::out_of_range);
}

namespace {

bool overlaps(const Interval& a, const Interval& b) { return a.left <= b.right && b.left <= a.right; }

}  // namespace

TEST(BuildCanonical, RandomFamiliesMatchExplicitAdjacency) {
    Rng rng(11);
    for (int it = 0; it < 300; ++it) {
        const auto inst = random_weighted_instance(1 + static_cast<int>(rng() % 30), 3, 3, rng);
        const auto g = build_canonical(inst);
        for (int u = 1; u <= g.n; ++u)
            for (int v = 1; v <= g.n; ++v)
                ASSERT_EQ(g.is_edge(u, v), u != v && overlaps(inst.items[g.order[u - 1]], inst.items[g.order[v - 1]]));
        // Every clique is maximal and listed once.
        for (std::size_t i = 0; i < g.cliques.size(); ++i) {
            const auto q = g.cliques[i];
            ASSERT_TRUE(g.is_clique(q.first, q.last));
            if (q.first > 1) ASSERT_FALSE(g.is_clique(q.first - 1, q.last));
            if (q.last < g.n) ASSERT_FALSE(g.is_clique(q.first, q.last + 1));
        }
    }
}

TEST(BuildCanonical, InjectedContainmentAlwaysRaises) {
    Rng rng(12);
    for (int it = 0; it < 200; ++it) {
        auto inst = random_proper_instance(2 + static_cast<int>(rng() % 20), 3, rng);
        const auto host = inst.items[rng() % inst.size()];
        inst.items.push_back({"outer", host.left - 1, host.right + 1, 1});
        EXPECT_THROW(build_canonical(inst), NotProperError);
    }
}

TEST(PigFromRmn, UmbrellaAndConsecutiveEdges) {
    for (int n = 1; n <= 9; ++n)
        enumerate_rmn(n, [&](const std::vector<int>& rmn) {
            const auto g = pig_from_rmn(rmn);
            for (int u = 1; u <= n; ++u)
                for (int w = u + 2; w <= n; ++w)
                    if (g.is_edge(u, w))
                        for (int v = u + 1; v < w; ++v) ASSERT_TRUE(g.is_edge(u, v) && g.is_edge(v, w));
            for (int i = 1; i < n; ++i) ASSERT_TRUE(g.is_edge(i, i + 1));
            ASSERT_EQ(g.rmn, rmn);
            // round trip through an interval realisation
            const auto h = build_canonical(instance_from_pig(g));
            ASSERT_EQ(h.rmn, g.rmn);
            ASSERT_EQ(h.cliques, g.cliques);
        });
}

TEST(PigFromRmn, EnumerationCounts) {
    // Connected canonical profiles are counted by the Catalan numbers.
    const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 1; n <= 8; ++n) {
        int count = 0;
        enumerate_rmn(n, [&](const std::vector<int>&) { ++count; });
        EXPECT_EQ(count, catalan[n - 1]) << "n=" << n;
    }
}

TEST(Slice, ReindexesRange) {
    const auto g = pig("a 1 3\nb 2 4\nc 6 8\nd 7 9\ne 8 10\n");
    const auto s = g.slice({3, 5});
    EXPECT_EQ(s.n, 3);
    EXPECT_EQ(s.omega, 3);
    EXPECT_EQ(s.cliques, test::blocks({{1, 3}}));
    EXPECT_THROW(g.slice({2, 4}), std::invalid_argument);
}
