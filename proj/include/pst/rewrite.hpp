#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pst/partitioned_graph.hpp"

namespace pst {

/// One part of a node split: its occupancy and its degree toward each
/// neighbour of the replaced node.
struct SplitPart {
    std::int64_t occupancy = 0;
    std::vector<std::pair<std::string, std::int64_t>> degrees; // (neighbor id, degree)
};

/// A single applied rule, replayable against the graph it was recorded on.
struct RewriteStep {
    std::string rule; // reduce | reduce-reverse | reduce-subgraph | delta-double | node-split | symmetrize
    std::vector<std::string> nodes;
    std::int64_t factor = 0;
    std::vector<SplitPart> parts;
    std::int64_t before = 0;
    std::int64_t after = 0;
};

struct RewriteTrace {
    std::string initial_hash;
    std::vector<RewriteStep> steps;
    std::int64_t final_count = 0;
};

/// Reduce the node's occupancy by n^2; node-side degrees scale by n,
/// neighbour-side degrees by 1/n. The quotient is unchanged.
PartitionedGraph reduce_node(const PartitionedGraph& g, const std::string& node, std::int64_t n);

/// Inverse of reduce_node: occupancy grows by n^2.
PartitionedGraph reduce_node_reverse(const PartitionedGraph& g, const std::string& node,
                                     std::int64_t n);

/// Grouped version: every node in the set shrinks by n^2, internal edges
/// keep their degrees, boundary edges adjust as in the single-node rule.
PartitionedGraph reduce_subgraph(const PartitionedGraph& g, const std::vector<std::string>& nodes,
                                 std::int64_t n);

/// Bipartite lift: doubles odd-layer occupancies and even-layer degrees,
/// multiplying every quotient coupling by sqrt(2).
PartitionedGraph delta_double(const PartitionedGraph& g);

/// All non-trivial replacements of one node by at most max_parts nodes with
/// matched second-moment couplings, sorted by replacement occupancy.
std::vector<PartitionedGraph> split_node(const PartitionedGraph& g, const std::string& node,
                                         int max_parts = 3);

/// Replacement parts of each split, aligned with split_node's output.
std::vector<std::vector<SplitPart>> split_node_parts(const PartitionedGraph& g,
                                                     const std::string& node, int max_parts = 3);

/// Apply one explicit split (used by trace replay).
PartitionedGraph apply_split(const PartitionedGraph& g, const std::string& node,
                             const std::vector<SplitPart>& parts);

PartitionedGraph cartesian_product(const PartitionedGraph& a, const PartitionedGraph& b);

/// Merge the mirror-pair nodes of g x g into single nodes of doubled
/// occupancy; diagonal degrees toward merged nodes double.
PartitionedGraph symmetrize_square(const PartitionedGraph& g);

/// Relabel-invariant structural key (stable under node reordering whenever
/// refinement separates all nodes, which holds for the catalog families).
std::uint64_t canonical_key(const PartitionedGraph& g);
std::string canonical_hash(const PartitionedGraph& g);

struct SearchOptions {
    enum class Strategy { kGreedy, kExhaustive };
    Strategy strategy = Strategy::kExhaustive;
    std::int64_t budget = 200000;        // DFS expansions before giving up
    std::int64_t max_depth = 64;         // longest rewrite sequence explored
    std::vector<std::int64_t> factors = {2};
    std::int64_t reverse_growth_cap = 64; // max occupancy growth over the initial graph
};

struct SearchResult {
    PartitionedGraph graph;
    RewriteTrace trace;
    bool budget_exceeded = false;
    std::int64_t best_count = 0;
};

/// Deterministic search over reduce/reverse/subgraph applications, keeping
/// the input and output nodes untouched. Exhaustive strategy runs a DFS with
/// memoization on canonical form and an occupancy-kernel bound.
SearchResult reduce_search(const PartitionedGraph& g, const SearchOptions& options = {});

/// Replay a recorded step; throws when the rule name is unknown.
PartitionedGraph apply_step(const PartitionedGraph& g, const RewriteStep& step);

} // namespace pst
