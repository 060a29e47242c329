#pragma once

// Timing helpers for scaling runs.

#include <functional>
#include <string>
#include <vector>

namespace chromon {

struct BenchRow {
    std::string family;
    long long param = 0;  // n, or t for the adversarial family
    long long n = 0;
    long long expanded_n = 0;
    long long forbidden_blocks = -1;  // -1 when not measured
    int lambda = 0;
    double seconds = 0;
};

// Minimum wall time of fn over `reps` runs.
double time_best(const std::function<void()>& fn, int reps);

// split_mark on adversarial_family(t) at C = 2t.
BenchRow bench_adversarial(int t, int reps = 3);
// solve_unweighted on banded_instance(n, depth) at the given capacity.
BenchRow bench_banded(int n, int depth, int capacity, int reps = 3);
// solve_unweighted on a seeded random proper instance.
BenchRow bench_random(int n, int capacity, unsigned long long seed, int reps = 3);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace chromon
