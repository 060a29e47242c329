#pragma once

// Block-partition integer program, its LP relaxation, and the prefix-sum
// rounding of fractional points. No solver is embedded: models are written
// in CPLEX LP text and solutions are read back as `j value` lines.
//
// x_j = 1 means a block ends at canonical position j.

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromon/partition.hpp"
#include "chromon/pig.hpp"

namespace chromon {

using Rational = boost::multiprecision::cpp_rational;

struct FractionalSolution {
    std::vector<Rational> x;  // slot 0 unused
    Rational lambda;
};

struct LpViolation {
    std::string constraint;  // "bound:x3", "end:7", "size:2", "clique:3-7"
    Rational slack;          // negative by the amount the constraint is missed
};

struct LpReport {
    std::vector<LpViolation> violations;
    bool ok() const noexcept { return violations.empty(); }
};

struct IlpModel {
    std::string text;
    int binaries = 0;
    int end_rows = 0;
    int size_rows = 0;
    int clique_rows = 0;
};

// Objective min lambda; one end row per component (x_last = 1), size rows for
// windows i = 1..n-C+1, one clique row per maximal clique [u,v] bounding the
// block ends in u..v-1 by lambda - 1.
IlpModel emit_ilp(const CanonicalPIG& g, int capacity);

// Exact value of "3", "-0.25", "1.5e-2" or "2/3". Throws ParseError.
Rational parse_rational(std::string_view token, std::size_t line = 0);

// `j value` (or `xj value`) lines plus one `lambda value` line; '#' comments.
// Every x_1..x_n must be given exactly once.
FractionalSolution parse_solution(std::string_view text, int n);
std::string format_solution(const FractionalSolution& sol);

LpReport check_feasible(const FractionalSolution& sol, const CanonicalPIG& g, int capacity);

struct RoundedSolution {
    std::vector<int> x;  // slot 0 unused
    int lambda = 0;
    LpReport postcheck;  // the rounded point checked against every ILP row
};

// y_j = x_1 + ... + x_j; xbar_j = [ceil(y_{j-1}) != ceil(y_j)]; lambdabar = floor(lambda).
// Throws InfeasibleInputError when sol is not LP-feasible.
RoundedSolution round_fractional(const FractionalSolution& sol, const CanonicalPIG& g, int capacity);

// Block partition whose blocks end where x_j = 1 (x_n must be 1).
BlockPartition blocks_from_ends(const CanonicalPIG& g, const std::vector<int>& x, int capacity);

Rational ceil_of(const Rational& r);
Rational floor_of(const Rational& r);

}  // namespace chromon
