#include <gtest/gtest.h>

#include "chromon/error.hpp"
#include "chromon/generators.hpp"
#include "chromon/io.hpp"
#include "chromon/lighttrail.hpp"
#include "support.hpp"

using namespace chromon;

namespace {

std::vector<TransmissionRequest> requests_from(const IntervalInstance& inst) {
    std::vector<TransmissionRequest> out;
    for (const auto& it : inst.items)
        out.push_back({it.id, static_cast<int>(it.left), static_cast<int>(it.right) + 1, it.weight});
    return out;
}

}  // namespace

TEST(Requests, ParseAndNormalize) {
    const auto r = parse_requests("a 0 2 1\nb 3 1 2  # reversed\n");
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[1].src, 1);
    EXPECT_EQ(r[1].dst, 3);
    EXPECT_EQ(r[1].bandwidth, 2);
    EXPECT_EQ(parse_requests(format_requests(r)).size(), 2u);
    EXPECT_THROW(parse_requests("a 1 1 1\n"), ParseError);
    EXPECT_THROW(parse_requests("a 1 2 0\n"), ParseError);
    EXPECT_THROW(parse_requests("a 1 2\n"), ParseError);
}

TEST(Requests, SharedLinkMeansOverlap) {
    const auto g = build_canonical(requests_to_intervals(parse_requests("a 0 2 1\nb 1 3 1\n"), 1));
    EXPECT_TRUE(g.is_edge(1, 2));
    const auto h = build_canonical(requests_to_intervals(parse_requests("a 0 1 1\nb 1 2 1\n"), 1));
    EXPECT_FALSE(h.is_edge(1, 2));
}

TEST(Requests, Example62Shape) {
    const auto g = build_canonical(requests_to_intervals(parse_requests(test::data("requests/example62.txt")), 3));
    const auto ref = test::pig(test::kExample62);
    EXPECT_EQ(g.rmn, ref.rmn);
    EXPECT_EQ(g.cliques, ref.cliques);
}

TEST(Requests, BandwidthAboveCapacity) {
    EXPECT_THROW(requests_to_intervals(parse_requests("a 0 2 5\n"), 4), WeightTooLargeError);
}

TEST(Schedule, Example62) {
    const auto reqs = parse_requests(test::data("requests/example62.txt"));
    const auto plan = schedule(reqs, 3, ScheduleMode::unweighted);
    ASSERT_EQ(plan.wavelengths.size(), 2u);
    std::vector<std::vector<std::string>> trails;
    for (const auto& w : plan.wavelengths)
        for (const auto& t : w.trails) {
            std::vector<std::string> ids;
            for (const auto& s : t.requests) ids.push_back(s.request);
            trails.push_back(ids);
        }
    std::sort(trails.begin(), trails.end());
    EXPECT_EQ(trails, (std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d", "e"}, {"f", "g"}}));
    std::size_t shutters = 0;
    for (const auto& w : plan.wavelengths) shutters += w.shutters.size();
    EXPECT_EQ(shutters, 6u);
    EXPECT_TRUE(validate_plan(plan, reqs, 3).ok());
}

TEST(Schedule, SingleRequest) {
    const auto reqs = parse_requests("only 2 5 1\n");
    const auto plan = schedule(reqs, 1, ScheduleMode::unweighted);
    ASSERT_EQ(plan.wavelengths.size(), 1u);
    ASSERT_EQ(plan.wavelengths[0].trails.size(), 1u);
    EXPECT_EQ(plan.wavelengths[0].trails[0].left, 2);
    EXPECT_EQ(plan.wavelengths[0].trails[0].right, 5);
    EXPECT_EQ(plan.wavelengths[0].shutters, (std::vector<int>{2, 5}));
}

TEST(Schedule, SplittableOverlap) {
    const auto reqs = parse_requests(test::data("requests/overlap222.txt"));
    const auto plan = schedule(reqs, 3, ScheduleMode::splittable);
    ASSERT_EQ(plan.wavelengths.size(), 2u);
    int split = 0;
    for (const auto& w : plan.wavelengths)
        for (const auto& t : w.trails)
            for (const auto& s : t.requests) split += s.amount < 2;
    EXPECT_EQ(split, 2);  // one request, two shares
    EXPECT_TRUE(validate_plan(plan, reqs, 3).ok());
    const auto whole = schedule(reqs, 3, ScheduleMode::nonsplittable);
    EXPECT_EQ(whole.wavelengths.size(), 3u);
    EXPECT_TRUE(validate_plan(whole, reqs, 3).ok());
}

TEST(Schedule, Rejections) {
    EXPECT_THROW(schedule(parse_requests("a 0 9 1\nb 2 5 1\n"), 2, ScheduleMode::unweighted), NotProperError);
    EXPECT_THROW(schedule(parse_requests("a 0 9 2\n"), 2, ScheduleMode::unweighted), InfeasibleInputError);
    EXPECT_THROW(schedule(parse_requests("a 0 9 3\n"), 2, ScheduleMode::splittable), WeightTooLargeError);
}

TEST(ValidatePlan, CatchesBrokenPlans) {
    const auto reqs = parse_requests(test::data("requests/example62.txt"));
    const auto plan = schedule(reqs, 3, ScheduleMode::unweighted);

    auto clash = plan;  // a trail that shares a link with another on its wavelength
    auto& w = clash.wavelengths[0];
    w.trails.push_back(w.trails[0]);
    EXPECT_FALSE(validate_plan(clash, reqs, 3).ok());

    auto dropped = plan;
    dropped.wavelengths[1].trails[0].requests.pop_back();
    dropped.wavelengths[1].trails[0].load -= 1;
    const auto r = validate_plan(dropped, reqs, 3);
    EXPECT_FALSE(r.ok());

    auto shutter = plan;
    shutter.wavelengths[0].shutters.push_back(12);
    EXPECT_FALSE(validate_plan(shutter, reqs, 3).ok());

    auto heavy = plan;
    EXPECT_FALSE(validate_plan(heavy, reqs, 2).ok());
}

TEST(Plan, JsonRoundTripAndDiagram) {
    const auto reqs = parse_requests(test::data("requests/overlap222.txt"));
    const auto plan = schedule(reqs, 3, ScheduleMode::splittable);
    const auto text = plan_to_json(plan);
    EXPECT_EQ(plan_to_json(plan_from_json(text)), text);
    EXPECT_THROW(plan_from_json("{\"mode\": 3}"), ParseError);
    const auto d = plan_diagram(plan);
    EXPECT_NE(d.find("w1 "), std::string::npos);
    EXPECT_NE(d.find('X'), std::string::npos);
}

TEST(Schedule, RandomRoundTrip) {
    Rng rng(31);
    for (int it = 0; it < 300; ++it) {
        const auto mode = static_cast<ScheduleMode>(rng() % 3);
        const Weight c = 1 + static_cast<Weight>(rng() % 5);
        const auto reqs = requests_from(random_weighted_instance(
            1 + static_cast<int>(rng() % 40), 4, mode == ScheduleMode::unweighted ? 1 : c, rng));
        const auto plan = schedule(reqs, c, mode);
        ASSERT_TRUE(validate_plan(plan, reqs, c).ok()) << validate_plan(plan, reqs, c).summary();
        ASSERT_GE(static_cast<Weight>(plan.wavelengths.size()), (congestion(reqs) + c - 1) / c);
    }
}

TEST(Io, SolutionJsonRoundTrip) {
    const auto inst = parse_instance(test::kOverlap222);
    const auto g = build_canonical(inst);
    const auto s = solve_split(g, 3);
    const auto j = solution_json(inst, g, s, validate_split_coloring(g, s.coloring, 3, s.coloring.lambda));
    const auto parsed = parse_solution_json(j.dump(), inst);
    EXPECT_EQ(parsed.kind, "split");
    EXPECT_TRUE(verify_solution(parsed, inst, 3).ok());
    EXPECT_FALSE(verify_solution(parsed, inst, 2).ok());

    const auto u = parse_instance(test::kExample62);
    const auto gu = build_canonical(u);
    const auto p = solve_unweighted(gu, 3);
    const auto c = partition_to_coloring(p, gu);
    auto ju = solution_json(u, gu, p, c, ValidationReport{});
    EXPECT_TRUE(verify_solution(parse_solution_json(ju.dump(), u), u, 3).ok());
    ju["color_by_id"]["c"] = 1;  // merges {a,b} with {c,d,e}
    EXPECT_FALSE(verify_solution(parse_solution_json(ju.dump(), u), u, 3).ok());
    ju["color_by_id"].erase("g");
    EXPECT_THROW(parse_solution_json(ju.dump(), u), ParseError);
}
