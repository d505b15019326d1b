#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "pst/bigint.hpp"
#include "pst/errors.hpp"

namespace pst {

struct PartitionedNode {
    std::string id;
    std::int64_t occupancy = 0;
};

/// Edge between nodes u and v; du is the degree of each u-vertex into v,
/// dv the degree of each v-vertex into u.
struct PartitionedEdge {
    int u = -1;
    int v = -1;
    std::int64_t du = 0;
    std::int64_t dv = 0;
};

/// Equitable distance partition of a graph: nodes with occupancies, edges
/// with bidegrees. Immutable after construction except through the builder
/// calls used by constructors and rewrite rules.
class PartitionedGraph {
public:
    int add_node(const std::string& id, std::int64_t occupancy);
    void add_edge(const std::string& u, const std::string& v, std::int64_t du, std::int64_t dv);
    void add_edge(int u, int v, std::int64_t du, std::int64_t dv);
    void set_input(const std::string& id);
    void set_output(const std::string& id);
    void set_delta_hint(std::int64_t delta) { delta_hint_ = delta; }

    int node_count() const { return static_cast<int>(nodes_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<PartitionedNode>& nodes() const { return nodes_; }
    const std::vector<PartitionedEdge>& edges() const { return edges_; }
    const PartitionedNode& node(int i) const { return nodes_[i]; }
    const PartitionedEdge& edge(int i) const { return edges_[i]; }
    int input() const { return input_; }
    int output() const { return output_; }
    std::optional<std::int64_t> delta_hint() const { return delta_hint_; }

    /// Index of the node with the given id, or -1.
    int find_node(const std::string& id) const;
    bool has_edge(int u, int v) const;

    /// Incident edge indices per node.
    const std::vector<std::vector<int>>& incidence() const;

    // Mutators used by the rewrite rules; they keep the incidence cache fresh.
    void set_occupancy(int node, std::int64_t occ) { nodes_[node].occupancy = occ; }
    void set_edge_degrees(int e, std::int64_t du, std::int64_t dv) {
        edges_[e].du = du;
        edges_[e].dv = dv;
    }
    /// Replace node `v` by a fresh set of nodes; edges incident to `v` are
    /// dropped and must be re-added by the caller.
    void erase_node_with_edges(int v);

private:
    std::vector<PartitionedNode> nodes_;
    std::vector<PartitionedEdge> edges_;
    int input_ = -1;
    int output_ = -1;
    std::optional<std::int64_t> delta_hint_;
    std::unordered_map<std::string, int> index_;
    mutable std::vector<std::vector<int>> incidence_;
    mutable bool incidence_fresh_ = false;
};

/// Real-weighted symmetric adjacency with marked input/output vertices.
struct WeightedGraph {
    Eigen::MatrixXd weights; // symmetric, zero diagonal, nonnegative
    int input = -1;
    int output = -1;

    int size() const { return static_cast<int>(weights.rows()); }
};

/// Simple graph produced by expanding a partition.
struct ExplicitGraph {
    std::int64_t vertex_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges; // u < v
    std::int64_t input = -1;
    std::int64_t output = -1;
    std::vector<int> node_of; // vertex -> node index in the source partition
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool input_occupancy_one = false;
    bool output_occupancy_one = false;

    bool ok() const { return violations.empty(); }
};

/// Checks every partition invariant; the report lists each violation.
ValidationReport validate(const PartitionedGraph& g);
void require_valid(const PartitionedGraph& g); // throws InvalidGraphError

BigInt vertex_count(const PartitionedGraph& g);

struct NodeDistances {
    std::vector<int> distance;   // per node, from the input node
    int transfer_distance = -1;  // distance of the output node
};

/// BFS distances over the node graph. Throws DisconnectedError.
NodeDistances node_distances(const PartitionedGraph& g);

/// Weighted quotient: one vertex per node, weight sqrt(du*dv) per edge.
WeightedGraph quotient(const PartitionedGraph& g);

/// Squared quotient coupling du*dv of the edge between two nodes.
std::int64_t edge_coupling_squared(const PartitionedGraph& g, int u, int v);

/// Deterministic canonical realization: vertex i of node u joins node-v
/// vertices (i*du + k) mod occ(v) for k = 0..du-1.
ExplicitGraph expand(const PartitionedGraph& g);

/// Explicit edge count of any realization, computed from the partition.
BigInt explicit_edge_count(const PartitionedGraph& g);

/// Maximum vertex degree of any realization of g.
std::int64_t max_vertex_degree(const PartitionedGraph& g);

/// True when BFS distances in the explicit graph match the node distances.
bool explicit_distances_consistent(const ExplicitGraph& eg, const PartitionedGraph& g);

/// Adjacency of an explicit graph as a WeightedGraph with unit weights.
WeightedGraph adjacency(const ExplicitGraph& g);

/// Node-graph bipartition labels by parity of distance from the input.
/// Throws NotBipartiteError when an edge joins nodes of equal parity.
std::vector<int> bipartite_labels(const PartitionedGraph& g);

} // namespace pst
