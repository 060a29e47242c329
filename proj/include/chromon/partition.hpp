#pragma once

// Exact unweighted component coloring on proper interval graphs.

#include <optional>
#include <vector>

#include "chromon/pig.hpp"

namespace chromon {

struct ForbiddenMarks {
    int k = 0;
    std::vector<char> forbidden;  // slot 0 is the virtual non-forbidden vertex
    std::vector<int> ldist;
    std::vector<int> rnf;

    std::vector<int> positions() const;
};

struct BlockPartition {
    std::vector<Block> blocks;
    int capacity = 0;
    int lambda = 0;
};

struct Coloring {
    std::vector<int> color;  // by canonical position, slot 0 unused
    int lambda = 0;
};

// ceil(omega / C)
int lower_bound(int omega, int capacity);
// ceil((omega + C - 1) / C)
int upper_bound(int omega, int capacity);

// Max number of blocks met by a maximal clique. Blocks must tile 1..n.
int clique_intersection(const CanonicalPIG& g, const std::vector<Block>& blocks);

// Blocks of C consecutive vertices, restarted at every component boundary.
BlockPartition simple_part(const CanonicalPIG& g, int capacity);

// Vertices where no block of a [k+1, C]-partition may end. k is taken from
// g.omega, so g is expected to be connected (otherwise the largest clique
// decides k for every component). With k = 0 only primary marks exist.
ForbiddenMarks mark_forbidden(const CanonicalPIG& g, int capacity);

// Greedy blocks avoiding forbidden ends; nullopt when C consecutive vertices
// are forbidden, i.e. no [k+1, C]-partition exists.
std::optional<BlockPartition> comb_part(const CanonicalPIG& g, int capacity);
std::optional<BlockPartition> comb_part(const CanonicalPIG& g, int capacity, const ForbiddenMarks& marks);

// Optimal block partition, solved per component; lambda is the maximum.
BlockPartition solve_unweighted(const CanonicalPIG& g, int capacity);

// Block i gets colour (i - 1) mod lambda + 1.
Coloring partition_to_coloring(const BlockPartition& p, const CanonicalPIG& g);

}  // namespace chromon
