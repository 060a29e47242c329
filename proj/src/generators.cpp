#include "chromon/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chromon {

void enumerate_rmn(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1) return;
    std::vector<int> rmn(n + 1, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            rmn[n] = n;
            fn(rmn);
            return;
        }
        for (int r = std::max(i + 1, rmn[i - 1]); r <= n; ++r) {
            rmn[i] = r;
            rec(i + 1);
        }
    };
    rec(1);
}

IntervalInstance random_proper_instance(int n, int span, Rng& rng) {
    return random_weighted_instance(n, span, 1, rng);
}

IntervalInstance random_weighted_instance(int n, int span, Weight max_weight, Rng& rng) {
    if (span < 1) throw std::invalid_argument("span must be >= 1");
    std::uniform_int_distribution<int> gap(1, 2);
    std::uniform_int_distribution<int> len(1, 2 * span);
    std::uniform_int_distribution<Weight> wt(1, std::max<Weight>(1, max_weight));
    IntervalInstance inst;
    std::int64_t left = 0;
    std::int64_t prev_right = 0;
    for (int i = 0; i < n; ++i) {
        left += gap(rng);
        std::int64_t right = std::max(left + len(rng), prev_right + 1);
        prev_right = right;
        inst.items.push_back({"v" + std::to_string(i + 1), left, right, wt(rng)});
    }
    return inst;
}

IntervalInstance adversarial_family(int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    // Coordinates are scaled by s so the t intervals sharing left end t+1 can
    // be given distinct lefts without changing any intersection.
    const std::int64_t s = t + 1;
    IntervalInstance inst;
    auto add = [&](std::int64_t left, std::int64_t right, Weight w) {
        inst.items.push_back({"v" + std::to_string(inst.items.size() + 1), left, right, w});
    };
    for (int j = 1; j <= t + 1; ++j) add(s * j, s * (2 * t + 2 * j - 1), 2);
    for (int j = 2; j <= t; ++j) add(s * (t + 1) + (j - 1), s * (4 * t + j), 2 * static_cast<Weight>(t));
    for (int j = 1; j <= t; ++j) add(s * (2 * t + 2 * j), s * (5 * t + j), 2);
    return inst;
}

IntervalInstance banded_instance(int n, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    IntervalInstance inst;
    inst.items.reserve(n);
    for (int i = 0; i < n; ++i)
        inst.items.push_back({"v" + std::to_string(i + 1), 2 * static_cast<std::int64_t>(i),
                              2 * static_cast<std::int64_t>(i) + 2 * depth - 1, 1});
    return inst;
}

}  // namespace chromon
