#pragma once

// Interval instances and their canonical proper-interval-graph form.
//
// Vertices of a CanonicalPIG are canonical positions 1..n. Per-vertex arrays
// have n + 1 slots; slot 0 is the virtual vertex and is never a real vertex.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chromon {

using Weight = std::int64_t;

struct Interval {
    std::string id;
    std::int64_t left = 0;
    std::int64_t right = 0;
    Weight weight = 1;
};

struct IntervalInstance {
    std::vector<Interval> items;

    std::size_t size() const noexcept { return items.size(); }
    Weight max_weight() const noexcept;
    bool unit_weights() const noexcept;
};

// Parses `id left right [weight]` records. '#' starts a comment.
// Throws ParseError with the offending line number.
IntervalInstance parse_instance(std::string_view text);

// Inverse of parse_instance (weights written only when not 1).
std::string format_instance(const IntervalInstance& inst);

// Throws ParseError (line 0) when an invariant of IntervalInstance fails.
void check_instance(const IntervalInstance& inst);

// Block [first, last] of canonical positions.
struct Block {
    int first = 0;
    int last = 0;

    int size() const noexcept { return last - first + 1; }
    bool contains(int v) const noexcept { return first <= v && v <= last; }
    friend bool operator==(const Block&, const Block&) = default;
};

class CanonicalPIG {
public:
    int n = 0;
    // order[p - 1] is the index into IntervalInstance::items of position p.
    std::vector<int> order;
    std::vector<int> rmn;
    std::vector<int> lmn;
    // Weights by canonical position (slot 0 = 0).
    std::vector<Weight> weight;
    // Maximal cliques, sorted by both ends.
    std::vector<Block> cliques;
    int omega = 0;
    // Maximal connected vertex ranges.
    std::vector<Block> components;

    bool is_edge(int u, int v) const;
    bool is_clique(int first, int last) const noexcept { return first >= last || rmn[first] >= last; }
    bool connected() const noexcept { return components.size() == 1; }

    // k = floor((omega - 1) / C).
    int k(int capacity) const noexcept { return omega == 0 ? 0 : (omega - 1) / capacity; }

    // Re-indexed copy of the positions [range.first, range.last].
    CanonicalPIG slice(Block range) const;
};

// Canonical ordering, maximal cliques, rmn/lmn, omega and components.
// Throws NotProperError when an interval properly contains another.
CanonicalPIG build_canonical(const IntervalInstance& inst);

// Unit-weight PIG defined by its rightmost-neighbour array (slot 0 ignored).
// rmn must satisfy rmn[i] >= max(i, rmn[i-1]) and rmn[n] = n.
CanonicalPIG pig_from_rmn(const std::vector<int>& rmn);

// Interval realisation of a PIG: with s = 2(n + 1), vertex i -> [s i, s rmn(i) + i].
IntervalInstance instance_from_pig(const CanonicalPIG& g);

}  // namespace chromon
