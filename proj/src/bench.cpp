#include "chromon/bench.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chromon/generators.hpp"
#include "chromon/partition.hpp"
#include "chromon/weighted.hpp"

namespace chromon {

double time_best(const std::function<void()>& fn, int reps) {
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < std::max(reps, 1); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

BenchRow bench_adversarial(int t, int reps) {
    const CanonicalPIG g = build_canonical(adversarial_family(t));
    BenchRow row{"adversarial", t, g.n, z_array(g).total(), 0, 0, 0};
    std::size_t count = 0;
    row.seconds = time_best([&] { count = split_mark(g, 2 * t).size(); }, reps);
    row.forbidden_blocks = static_cast<long long>(count);
    return row;
}

namespace {

BenchRow bench_solve(const char* family, const CanonicalPIG& g, int capacity, int reps) {
    BenchRow row{family, g.n, g.n, g.n, -1, 0, 0};
    int lambda = 0;
    row.seconds = time_best([&] { lambda = solve_unweighted(g, capacity).lambda; }, reps);
    row.lambda = lambda;
    return row;
}

}  // namespace

BenchRow bench_banded(int n, int depth, int capacity, int reps) {
    return bench_solve("banded", build_canonical(banded_instance(n, depth)), capacity, reps);
}

BenchRow bench_random(int n, int capacity, unsigned long long seed, int reps) {
    Rng rng(seed);
    return bench_solve("random", build_canonical(random_proper_instance(n, 3 * capacity, rng)), capacity, reps);
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace chromon
