#pragma once

// JSON reports for solver results, and reading them back for verification.
//
// Report fields: kind ("unweighted", "split" or "nonsplit"), capacity,
// lambda, order (ids in canonical order), valid, violations, and
//   unweighted / nonsplit: blocks (lists of ids), colors (by canonical
//     position), color_by_id
//   split: assignment {id: [[color, amount], ...]}, blocks as expanded
//     [first, last] ranges
//   nonsplit: split_lambda as well.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "chromon/partition.hpp"
#include "chromon/pig.hpp"
#include "chromon/verify.hpp"
#include "chromon/weighted.hpp"

namespace chromon {

using Json = nlohmann::ordered_json;

Json report_json(const ValidationReport& r);

Json solution_json(const IntervalInstance& inst, const CanonicalPIG& g, const BlockPartition& p, const Coloring& c,
                   const ValidationReport& r);
Json solution_json(const IntervalInstance& inst, const CanonicalPIG& g, const SplitSolution& s,
                   const ValidationReport& r);
Json solution_json(const IntervalInstance& inst, const CanonicalPIG& g, const NonSplitSolution& s,
                   const ValidationReport& r);

struct ParsedSolution {
    std::string kind;
    int lambda = 0;
    std::vector<int> color;                       // by item index (non-split kinds)
    std::vector<std::vector<SplitPiece>> pieces;  // by item index (split kind)
};

// Reads a report produced by solution_json. Throws ParseError on malformed
// JSON, unknown ids or missing vertices.
ParsedSolution parse_solution_json(std::string_view text, const IntervalInstance& inst);

// Rechecks a parsed solution against the instance from scratch.
ValidationReport verify_solution(const ParsedSolution& s, const IntervalInstance& inst, Weight capacity);

}  // namespace chromon
