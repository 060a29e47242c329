#pragma once

// Seeded instance generators for tests, oracles and benchmarks.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "chromon/pig.hpp"

namespace chromon {

using Rng = std::mt19937_64;

// Calls fn(rmn) for every connected canonical rmn profile on n vertices:
// rmn(i) >= max(i + 1, rmn(i - 1)) for i < n and rmn(n) = n. Slot 0 unused.
void enumerate_rmn(int n, const std::function<void(const std::vector<int>&)>& fn);

// Proper interval family with n intervals. Lefts and rights both strictly
// increase; span controls the typical overlap depth.
IntervalInstance random_proper_instance(int n, int span, Rng& rng);

// Same shape as random_proper_instance with weights drawn from 1..max_weight.
IntervalInstance random_weighted_instance(int n, int span, Weight max_weight, Rng& rng);

// Family whose splittable marking produces t^2 + t + 1 forbidden blocks at
// C = 2t. n = 3t; weights 2 and 2t.
IntervalInstance adversarial_family(int t);

// Unit-weight proper family whose clique size stays near `depth` (for timing).
IntervalInstance banded_instance(int n, int depth);

}  // namespace chromon
