#pragma once

// Split graphs: the ceil(omega/C) + 1 upper bound, and the SAT -> SP -> CP
// reduction chain with certificate mappers and exhaustive deciders.
//
// SP (set partitioning): pair up 2n elements so that every subset contains
// both elements of some pair. CP: does a split graph have a
// [ceil(omega/C), C]-partition?

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromon/verify.hpp"

namespace chromon {

// Vertices of to_graph(): q[0..|Q|-1] first, then s.
struct SplitGraph {
    std::vector<std::string> q;
    std::vector<std::string> s;
    std::vector<std::vector<int>> adj;  // adj[j] = sorted indices into q

    int size() const noexcept { return static_cast<int>(q.size() + s.size()); }
    int omega() const noexcept;
    const std::string& id(int v) const;
    Graph to_graph() const;
    // Q (unless some S-vertex sees all of it) and N[w] for every w in S.
    std::vector<std::vector<int>> maximal_cliques() const;
};

// `Q id...` once, then `S id nbr...` per independent vertex; '#' comments.
SplitGraph parse_split_graph(std::string_view text);
std::string format_split_graph(const SplitGraph& g);

// Moves an S-vertex adjacent to all of Q into Q (at most one can exist).
SplitGraph normalize(const SplitGraph& g);

struct SplitBound {
    SplitGraph graph;  // normalized
    GeneralPartition partition;
    std::vector<int> color;  // 1-based colors, vertex order of graph.to_graph()
    int lambda = 0;          // clique intersection of partition
    int colors = 0;
};

// Q cut into ceil(omega/C) parts (all but the last of size C), S-vertices as
// singletons, parts colored greedily with Q first.
SplitBound split_upper_bound(const SplitGraph& g, int capacity);

struct Cnf {
    int vars = 0;
    std::vector<std::vector<int>> clauses;  // DIMACS literals
};

// DIMACS CNF. Repeated literals are merged; a clause holding x and -x is
// always true and is dropped.
Cnf parse_dimacs(std::string_view text);
std::string format_dimacs(const Cnf& f);

struct SPInstance {
    std::vector<std::string> elements;
    std::vector<std::vector<int>> subsets;  // sorted element indices
};

// `elements e...` once, then `subset e...` lines.
SPInstance parse_sp(std::string_view text);
std::string format_sp(const SPInstance& sp);

// Elements x_i, x_i', T_i, F_i per variable; four gadget subsets per variable
// and one subset per clause. nullopt when a clause is empty (trivially
// unsatisfiable).
std::optional<SPInstance> sat_to_sp(const Cnf& f);

struct CPInstance {
    SplitGraph graph;
    int capacity = 2;
    int target = 0;  // ceil(omega / C) = number of element pairs
};

// Clique vertex per element, independent vertex per subset, edge iff the
// element is NOT in the subset. Throws std::invalid_argument on an empty
// subset or an odd element count.
CPInstance sp_to_cp(const SPInstance& sp);

using Assignment = std::vector<bool>;                // slot 0 unused
using Grouping = std::vector<std::pair<int, int>>;  // element index pairs

ValidationReport check_assignment(const Cnf& f, const Assignment& a);
ValidationReport check_grouping(const SPInstance& sp, const Grouping& g);
ValidationReport check_cp_partition(const CPInstance& cp, const GeneralPartition& p);

// Certificate mappers; each validates its input and throws InvalidCertificate.
Grouping assignment_to_grouping(const Cnf& f, const Assignment& a);
// A literal grouped with T_i is true; {x_i,x_i'},{T_i,F_i} leaves x_i false.
Assignment grouping_to_assignment(const Cnf& f, const Grouping& g);
GeneralPartition grouping_to_partition(const CPInstance& cp, const SPInstance& sp, const Grouping& g);
Grouping partition_to_grouping(const CPInstance& cp, const SPInstance& sp, const GeneralPartition& p);

std::optional<Assignment> decide_sat_bruteforce(const Cnf& f, int guard = 20);
std::optional<Grouping> decide_sp_bruteforce(const SPInstance& sp, int guard = 24);
// Searches for a [ceil(omega/C), C]-partition. Guard on |Q|.
std::optional<GeneralPartition> decide_cp_bruteforce(const SplitGraph& g, int capacity, int guard = 14);

}  // namespace chromon
