#include "pst/partitioned_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace pst {

int PartitionedGraph::add_node(const std::string& id, std::int64_t occupancy) {
    if (index_.count(id)) throw Error("duplicate node id: " + id);
    int idx = static_cast<int>(nodes_.size());
    nodes_.push_back({id, occupancy});
    index_[id] = idx;
    incidence_fresh_ = false;
    return idx;
}

void PartitionedGraph::add_edge(const std::string& u, const std::string& v,
                                std::int64_t du, std::int64_t dv) {
    add_edge(find_node(u), find_node(v), du, dv);
}

void PartitionedGraph::add_edge(int u, int v, std::int64_t du, std::int64_t dv) {
    if (u < 0 || v < 0 || u >= node_count() || v >= node_count())
        throw Error("edge references unknown node");
    edges_.push_back({u, v, du, dv});
    incidence_fresh_ = false;
}

void PartitionedGraph::set_input(const std::string& id) {
    input_ = find_node(id);
    if (input_ < 0) throw Error("unknown input node: " + id);
}

void PartitionedGraph::set_output(const std::string& id) {
    output_ = find_node(id);
    if (output_ < 0) throw Error("unknown output node: " + id);
}

int PartitionedGraph::find_node(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool PartitionedGraph::has_edge(int u, int v) const {
    for (int e : incidence()[u]) {
        if (edges_[e].u == v || edges_[e].v == v) return true;
    }
    return false;
}

const std::vector<std::vector<int>>& PartitionedGraph::incidence() const {
    if (!incidence_fresh_) {
        incidence_.assign(nodes_.size(), {});
        for (int e = 0; e < edge_count(); ++e) {
            incidence_[edges_[e].u].push_back(e);
            incidence_[edges_[e].v].push_back(e);
        }
        incidence_fresh_ = true;
    }
    return incidence_;
}

void PartitionedGraph::erase_node_with_edges(int v) {
    std::vector<PartitionedEdge> kept;
    kept.reserve(edges_.size());
    for (const auto& e : edges_) {
        if (e.u != v && e.v != v) kept.push_back(e);
    }
    edges_ = std::move(kept);
    index_.erase(nodes_[v].id);
    nodes_.erase(nodes_.begin() + v);
    for (auto& [id, idx] : index_) {
        if (idx > v) --idx;
    }
    for (auto& e : edges_) {
        if (e.u > v) --e.u;
        if (e.v > v) --e.v;
    }
    if (input_ == v) input_ = -1;
    else if (input_ > v) --input_;
    if (output_ == v) output_ = -1;
    else if (output_ > v) --output_;
    incidence_fresh_ = false;
}

ValidationReport validate(const PartitionedGraph& g) {
    ValidationReport report;
    auto complain = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

    if (g.node_count() == 0) complain("graph has no nodes");
    if (g.input() < 0) complain("no input node");
    if (g.output() < 0) complain("no output node");

    for (const auto& n : g.nodes()) {
        if (n.occupancy <= 0)
            complain("node " + n.id + " has non-positive occupancy");
    }
    if (g.delta_hint() && *g.delta_hint() <= 0) complain("delta hint must be positive");

    std::set<std::pair<int, int>> seen;
    for (const auto& e : g.edges()) {
        const auto& nu = g.node(e.u);
        const auto& nv = g.node(e.v);
        std::string tag = "edge " + nu.id + "-" + nv.id;
        if (e.u == e.v) {
            complain(tag + ": self-loop");
            continue;
        }
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) complain(tag + ": duplicate edge between node pair");
        if (e.du <= 0 || e.dv <= 0) complain(tag + ": non-positive degree");
        if (nu.occupancy * e.du != nv.occupancy * e.dv)
            complain(tag + ": consistency violated, " + std::to_string(nu.occupancy) + "*" +
                     std::to_string(e.du) + " != " + std::to_string(nv.occupancy) + "*" +
                     std::to_string(e.dv));
        if (e.du > nv.occupancy)
            complain(tag + ": degree " + std::to_string(e.du) + " exceeds occupancy " +
                     std::to_string(nv.occupancy));
        if (e.dv > nu.occupancy)
            complain(tag + ": degree " + std::to_string(e.dv) + " exceeds occupancy " +
                     std::to_string(nu.occupancy));
    }

    if (g.input() >= 0) report.input_occupancy_one = g.node(g.input()).occupancy == 1;
    if (g.output() >= 0) report.output_occupancy_one = g.node(g.output()).occupancy == 1;
    return report;
}

void require_valid(const PartitionedGraph& g) {
    ValidationReport r = validate(g);
    if (!r.ok()) throw InvalidGraphError("invalid partitioned graph: " + r.violations.front());
}

BigInt vertex_count(const PartitionedGraph& g) {
    BigInt total;
    for (const auto& n : g.nodes()) total += BigInt(n.occupancy);
    return total;
}

NodeDistances node_distances(const PartitionedGraph& g) {
    require_valid(g);
    NodeDistances result;
    result.distance.assign(g.node_count(), -1);
    std::deque<int> queue;
    result.distance[g.input()] = 0;
    queue.push_back(g.input());
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : g.incidence()[v]) {
            int w = g.edge(e).u == v ? g.edge(e).v : g.edge(e).u;
            if (result.distance[w] < 0) {
                result.distance[w] = result.distance[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < g.node_count(); ++v) {
        if (result.distance[v] < 0)
            throw DisconnectedError("node " + g.node(v).id + " unreachable from input");
    }
    result.transfer_distance = result.distance[g.output()];
    return result;
}

WeightedGraph quotient(const PartitionedGraph& g) {
    require_valid(g);
    WeightedGraph q;
    q.weights = Eigen::MatrixXd::Zero(g.node_count(), g.node_count());
    for (const auto& e : g.edges()) {
        double w = std::sqrt(static_cast<double>(e.du) * static_cast<double>(e.dv));
        q.weights(e.u, e.v) = w;
        q.weights(e.v, e.u) = w;
    }
    q.input = g.input();
    q.output = g.output();
    return q;
}

std::int64_t edge_coupling_squared(const PartitionedGraph& g, int u, int v) {
    for (int ei : g.incidence()[u]) {
        const auto& e = g.edge(ei);
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.du * e.dv;
    }
    throw Error("no edge between " + g.node(u).id + " and " + g.node(v).id);
}

ExplicitGraph expand(const PartitionedGraph& g) {
    require_valid(g);
    ExplicitGraph eg;
    std::vector<std::int64_t> offset(g.node_count());
    std::int64_t total = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        offset[v] = total;
        total += g.node(v).occupancy;
    }
    eg.vertex_count = total;
    eg.node_of.resize(total);
    for (int v = 0; v < g.node_count(); ++v) {
        for (std::int64_t i = 0; i < g.node(v).occupancy; ++i) eg.node_of[offset[v] + i] = v;
    }
    for (const auto& e : g.edges()) {
        std::int64_t n2 = g.node(e.v).occupancy;
        for (std::int64_t i = 0; i < g.node(e.u).occupancy; ++i) {
            for (std::int64_t k = 0; k < e.du; ++k) {
                std::int64_t a = offset[e.u] + i;
                std::int64_t b = offset[e.v] + (i * e.du + k) % n2;
                eg.edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::sort(eg.edges.begin(), eg.edges.end());
    eg.input = offset[g.input()];
    eg.output = offset[g.output()];
    return eg;
}

BigInt explicit_edge_count(const PartitionedGraph& g) {
    BigInt total;
    for (const auto& e : g.edges()) total += BigInt(g.node(e.u).occupancy) * BigInt(e.du);
    return total;
}

std::int64_t max_vertex_degree(const PartitionedGraph& g) {
    std::int64_t best = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        std::int64_t deg = 0;
        for (int ei : g.incidence()[v]) {
            const auto& e = g.edge(ei);
            deg += e.u == v ? e.du : e.dv;
        }
        best = std::max(best, deg);
    }
    return best;
}

bool explicit_distances_consistent(const ExplicitGraph& eg, const PartitionedGraph& g) {
    NodeDistances nd = node_distances(g);
    std::vector<std::vector<std::int64_t>> adj(eg.vertex_count);
    for (auto [a, b] : eg.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> dist(eg.vertex_count, -1);
    std::deque<std::int64_t> queue;
    dist[eg.input] = 0;
    queue.push_back(eg.input);
    while (!queue.empty()) {
        std::int64_t v = queue.front();
        queue.pop_front();
        for (std::int64_t w : adj[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    for (std::int64_t v = 0; v < eg.vertex_count; ++v) {
        if (dist[v] != nd.distance[eg.node_of[v]]) return false;
    }
    return true;
}

WeightedGraph adjacency(const ExplicitGraph& g) {
    WeightedGraph w;
    w.weights = Eigen::MatrixXd::Zero(g.vertex_count, g.vertex_count);
    for (auto [a, b] : g.edges) {
        w.weights(a, b) = 1.0;
        w.weights(b, a) = 1.0;
    }
    w.input = static_cast<int>(g.input);
    w.output = static_cast<int>(g.output);
    return w;
}

std::vector<int> bipartite_labels(const PartitionedGraph& g) {
    NodeDistances nd = node_distances(g);
    std::vector<int> label(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) label[v] = nd.distance[v] % 2;
    for (const auto& e : g.edges()) {
        if (label[e.u] == label[e.v])
            throw NotBipartiteError("edge " + g.node(e.u).id + "-" + g.node(e.v).id +
                                    " joins nodes of equal distance parity");
    }
    return label;
}

} // namespace pst
