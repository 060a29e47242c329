#pragma once

// Independent validators and brute-force oracles. Nothing here calls the
// solvers; everything is recomputed from adjacency.

#include <cstdint>
#include <string>
#include <vector>

#include "chromon/partition.hpp"
#include "chromon/pig.hpp"
#include "chromon/weighted.hpp"

namespace chromon {

// Simple undirected graph on vertices 0..n-1 with vertex weights.
class Graph {
public:
    explicit Graph(int n = 0);

    int size() const noexcept { return static_cast<int>(adj_.size()); }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }

    std::vector<Weight> weight;

    // Canonical position p becomes vertex p - 1.
    static Graph from_pig(const CanonicalPIG& g);

    // Bron-Kerbosch with pivoting; each clique sorted ascending.
    std::vector<std::vector<int>> maximal_cliques() const;
    // Vertex set is connected in the induced subgraph.
    bool connected(const std::vector<int>& vertices) const;

private:
    std::vector<std::vector<int>> adj_;
};

struct Violation {
    std::string kind;  // size, weight, connectedness, clique-intersection, contiguity, coverage, color
    std::string witness;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    void add(std::string kind, std::string witness) { violations.push_back({std::move(kind), std::move(witness)}); }
    std::string summary() const;
};

// part_of[v] in 0..parts-1.
struct GeneralPartition {
    std::vector<int> part_of;
    int parts = 0;

    std::vector<std::vector<int>> members() const;
};

// Largest number of parts any listed clique meets.
int clique_intersection(const std::vector<std::vector<int>>& cliques, const GeneralPartition& p);

// Maximal connected monochromatic vertex sets (color by vertex, 0-based).
std::vector<std::vector<int>> chromons_of(const Graph& g, const std::vector<int>& color);
// Same over canonical positions; coloring slots 1..n.
std::vector<std::vector<int>> chromons_of(const CanonicalPIG& g, const Coloring& c);

// Part weight <= C, parts connected, clique intersection <= lambda_claim.
ValidationReport validate_partition(const Graph& g, const std::vector<std::vector<int>>& cliques,
                                    const GeneralPartition& p, Weight capacity, int lambda_claim);
// Colors in 1..lambda_claim and every chromon of weight <= C.
ValidationReport validate_coloring(const Graph& g, const std::vector<int>& color, Weight capacity, int lambda_claim);

// Blocks tile 1..n in order inside components, weigh <= C, and meet every
// maximal clique at most lambda_claim times.
ValidationReport validate_blocks(const CanonicalPIG& g, const BlockPartition& p, int lambda_claim);
ValidationReport validate_coloring(const CanonicalPIG& g, const Coloring& c, Weight capacity, int lambda_claim);
// Pieces of v sum to W(v); per color, connected vertex groups weigh <= C.
ValidationReport validate_split_coloring(const CanonicalPIG& g, const SplitColoring& c, Weight capacity,
                                         int lambda_claim);

struct BlockOracleResult {
    int lambda = 0;
    BlockPartition witness;
};

struct GeneralOracleResult {
    int lambda = 0;
    GeneralPartition witness;
};

// Minimum clique intersection over all block partitions with block weight
// <= C (components cut separately). Guard: n <= guard.
BlockOracleResult brute_min_lambda_block(const CanonicalPIG& g, Weight capacity, int guard = 14);
// Minimum clique intersection over all partitions into connected parts of
// weight <= C. Guard: n <= guard.
GeneralOracleResult brute_min_lambda_general(const Graph& g, const std::vector<std::vector<int>>& cliques,
                                             Weight capacity, int guard = 9);
GeneralOracleResult brute_min_lambda_general(const CanonicalPIG& g, Weight capacity, int guard = 9);
// Fewest colors such that every chromon weighs <= C. Guard: n <= guard.
int brute_min_colors(const Graph& g, Weight capacity, int guard = 8);

struct BlockifyResult {
    BlockPartition partition;
    int rounds = 0;
};

// Exchange repair turning a partition of a unit-weight PIG (vertex p - 1 is
// position p) into a block partition without raising clique intersection.
BlockifyResult blockify_partition(const CanonicalPIG& g, const GeneralPartition& p, int capacity);

// Forbidden set by the definitions, iterated to a fixpoint (test oracle).
std::vector<int> forbidden_fixpoint(const CanonicalPIG& g, int capacity);

}  // namespace chromon
