#pragma once

// Splittable weighted solver over the implicit weight-expanded graph, and the
// non-splittable 2-approximation built on top of it.
//
// Expanded positions are 1..z(n); the copies of canonical vertex v occupy
// [z(v-1) + 1, z(v)]. Every weighted entry point requires W(v) <= C.

#include <optional>
#include <vector>

#include "chromon/partition.hpp"
#include "chromon/pig.hpp"

namespace chromon {

struct ZArray {
    std::vector<Weight> z;  // z[0] = 0, z[v] = W(1) + ... + W(v)

    Weight total() const noexcept { return z.back(); }
    // Original vertex owning expanded position pos (1 <= pos <= total()).
    int owner(Weight pos) const;
};

ZArray z_array(const CanonicalPIG& g);
ZArray z_array(const IntervalInstance& inst, const std::vector<int>& order);

// Expanded clique number: max over maximal cliques [u,v] of z(v) - z(u-1).
Weight expanded_omega(const CanonicalPIG& g, const ZArray& z);

struct ForbiddenBlock {
    Weight right = 0;
    Weight size = 0;
    Weight ldist = 0;

    Weight left() const noexcept { return right - size + 1; }
    friend bool operator==(const ForbiddenBlock&, const ForbiddenBlock&) = default;
};

// Sorted, pairwise disjoint forbidden blocks in a doubly linked list with two
// sentinels, [-2,-1] and [n'+2, n'+3]. Nodes live in a vector and are never
// reused, so node indices stay valid; a swallowed node forwards to the block
// that swallowed it.
class FBList {
public:
    struct Node {
        ForbiddenBlock fb;
        int prev = -1;
        int next = -1;
        int rnf = -1;
        int forward = -1;
        bool alive = true;
    };

    static constexpr int kBegin = 0;
    static constexpr int kEnd = 1;

    explicit FBList(Weight expanded_n);

    // Inserts [rt - sz + 1, rt] with the given ldist, deleting blocks it
    // covers and trimming the ones it overlaps. Parts below position 1 are
    // dropped. Returns the new node, or -1 when nothing remained.
    int inlay(Weight rt, Weight sz, Weight ld);

    const Node& node(int i) const { return nodes_[i]; }
    Node& node(int i) { return nodes_[i]; }
    // Live node containing pos, or -1.
    int find(Weight pos);
    // Follows forward links from a swallowed node to a live one.
    int resolve(int i) const;

    std::size_t size() const noexcept { return live_; }
    std::vector<ForbiddenBlock> blocks() const;
    std::vector<Weight> positions() const;
    Weight expanded_n() const noexcept { return expanded_n_; }

private:
    int make_node(ForbiddenBlock fb);
    void link_after(int where, int node);
    void unlink(int node);

    std::vector<Node> nodes_;
    int cursor_ = kBegin;
    std::size_t live_ = 0;
    Weight expanded_n_ = 0;
};

// Forbidden blocks of WXP(G) for the partition subproblem (target k+1).
FBList split_mark(const CanonicalPIG& g, int capacity);

struct ExpandedBlock {
    Weight first = 0;
    Weight last = 0;

    Weight size() const noexcept { return last - first + 1; }
    friend bool operator==(const ExpandedBlock&, const ExpandedBlock&) = default;
};

struct ExpandedPartition {
    std::vector<ExpandedBlock> blocks;
    int capacity = 0;
    int lambda = 0;
};

// Max number of expanded blocks met by an expanded maximal clique.
int expanded_clique_intersection(const CanonicalPIG& g, const ZArray& z, const std::vector<ExpandedBlock>& blocks);

// Greedy block formation over expanded positions, skipping forbidden blocks.
std::optional<ExpandedPartition> split_part(const CanonicalPIG& g, int capacity);
std::optional<ExpandedPartition> split_part(const CanonicalPIG& g, int capacity, const FBList& marks);

// Blocks of C expanded vertices, restarted at component boundaries.
ExpandedPartition split_simple_part(const CanonicalPIG& g, int capacity);

struct SplitPiece {
    int color = 0;
    Weight amount = 0;
    friend bool operator==(const SplitPiece&, const SplitPiece&) = default;
};

struct SplitColoring {
    std::vector<std::vector<SplitPiece>> pieces;  // by canonical position, slot 0 empty
    int lambda = 0;
};

struct SplitSolution {
    ExpandedPartition partition;
    SplitColoring coloring;
};

SplitSolution solve_split(const CanonicalPIG& g, int capacity);

// Per-vertex (color, amount) lists of an expanded partition, colors mod lambda.
SplitColoring split_coloring_of(const CanonicalPIG& g, const ZArray& z, const ExpandedPartition& p);

struct NonSplitSolution {
    BlockPartition partition;
    Coloring coloring;
    int split_lambda = 0;
};

// Non-splittable partition with lambda <= 2 * split lambda.
NonSplitSolution two_approx_nonsplit(const CanonicalPIG& g, int capacity);

// Explicit WXP(G) as a unit-weight PIG (for oracles and tests).
CanonicalPIG expand(const CanonicalPIG& g);

// Throws WeightTooLargeError when some W(v) > C.
void require_weights_within(const CanonicalPIG& g, int capacity);

}  // namespace chromon
