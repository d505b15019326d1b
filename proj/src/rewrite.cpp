#include "pst/rewrite.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace pst {

namespace {

struct IncidentEdge {
    int edge = -1;
    int other = -1;
    std::int64_t near = 0; // degree on the node's side
    std::int64_t far = 0;  // degree on the neighbour's side
};

std::vector<IncidentEdge> incident_edges(const PartitionedGraph& g, int v) {
    std::vector<IncidentEdge> out;
    for (int ei : g.incidence()[v]) {
        const auto& e = g.edge(ei);
        if (e.u == v)
            out.push_back({ei, e.v, e.du, e.dv});
        else
            out.push_back({ei, e.u, e.dv, e.du});
    }
    return out;
}

int require_node(const PartitionedGraph& g, const std::string& id) {
    int v = g.find_node(id);
    if (v < 0) throw PreconditionError("unknown node: " + id);
    return v;
}

std::optional<std::string> reduce_violation(const PartitionedGraph& g, int v, std::int64_t n) {
    const auto& node = g.node(v);
    if (n < 2) return "factor must be at least 2";
    if (node.occupancy % (n * n) != 0)
        return "occupancy of " + node.id + " not divisible by " + std::to_string(n * n);
    for (const auto& ie : incident_edges(g, v)) {
        const auto& other = g.node(ie.other);
        if (ie.far % n != 0)
            return "degree on " + other.id + " side not divisible by " + std::to_string(n);
        if (n * ie.near > other.occupancy)
            return "scaled degree " + std::to_string(n * ie.near) + " exceeds occupancy of " +
                   other.id;
    }
    return std::nullopt;
}

std::optional<std::string> reverse_violation(const PartitionedGraph& g, int v, std::int64_t n) {
    const auto& node = g.node(v);
    if (n < 2) return "factor must be at least 2";
    for (const auto& ie : incident_edges(g, v)) {
        if (ie.near % n != 0)
            return "degree on " + node.id + " side not divisible by " + std::to_string(n);
        if (n * ie.far > n * n * node.occupancy)
            return "scaled degree on " + g.node(ie.other).id + " side exceeds grown occupancy";
    }
    return std::nullopt;
}

std::optional<std::string> subgraph_violation(const PartitionedGraph& g,
                                              const std::vector<int>& members, std::int64_t n) {
    if (members.empty()) return "empty node set";
    std::vector<char> in_set(g.node_count(), 0);
    for (int v : members) in_set[v] = 1;
    for (int v : members) {
        if (g.node(v).occupancy % (n * n) != 0)
            return "occupancy of " + g.node(v).id + " not divisible by " + std::to_string(n * n);
    }
    for (const auto& e : g.edges()) {
        bool iu = in_set[e.u], iv = in_set[e.v];
        if (iu && iv) {
            // internal degrees stay; the reduced occupancies must still bound them
            if (e.du * n * n > g.node(e.v).occupancy)
                return "internal degree on " + g.node(e.u).id + " side exceeds reduced occupancy";
            if (e.dv * n * n > g.node(e.u).occupancy)
                return "internal degree on " + g.node(e.v).id + " side exceeds reduced occupancy";
        } else if (iu || iv) {
            int s = iu ? e.u : e.v;
            std::int64_t near = iu ? e.du : e.dv;
            std::int64_t far = iu ? e.dv : e.du;
            int t = iu ? e.v : e.u;
            if (far % n != 0)
                return "degree on " + g.node(t).id + " side not divisible by " + std::to_string(n);
            if (n * near > g.node(t).occupancy)
                return "scaled degree on " + g.node(s).id + " side exceeds occupancy of " +
                       g.node(t).id;
        }
    }
    return std::nullopt;
}

} // namespace

PartitionedGraph reduce_node(const PartitionedGraph& g, const std::string& node, std::int64_t n) {
    int v = require_node(g, node);
    if (auto why = reduce_violation(g, v, n)) throw PreconditionError(*why);
    PartitionedGraph out = g;
    out.set_occupancy(v, g.node(v).occupancy / (n * n));
    for (const auto& ie : incident_edges(g, v)) {
        const auto& e = g.edge(ie.edge);
        if (e.u == v)
            out.set_edge_degrees(ie.edge, e.du * n, e.dv / n);
        else
            out.set_edge_degrees(ie.edge, e.du / n, e.dv * n);
    }
    return out;
}

PartitionedGraph reduce_node_reverse(const PartitionedGraph& g, const std::string& node,
                                     std::int64_t n) {
    int v = require_node(g, node);
    if (auto why = reverse_violation(g, v, n)) throw PreconditionError(*why);
    PartitionedGraph out = g;
    out.set_occupancy(v, g.node(v).occupancy * n * n);
    for (const auto& ie : incident_edges(g, v)) {
        const auto& e = g.edge(ie.edge);
        if (e.u == v)
            out.set_edge_degrees(ie.edge, e.du / n, e.dv * n);
        else
            out.set_edge_degrees(ie.edge, e.du * n, e.dv / n);
    }
    return out;
}

PartitionedGraph reduce_subgraph(const PartitionedGraph& g, const std::vector<std::string>& nodes,
                                 std::int64_t n) {
    std::vector<int> members;
    for (const auto& id : nodes) members.push_back(require_node(g, id));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (auto why = subgraph_violation(g, members, n)) throw PreconditionError(*why);

    std::vector<char> in_set(g.node_count(), 0);
    for (int v : members) in_set[v] = 1;
    PartitionedGraph out = g;
    for (int v : members) out.set_occupancy(v, g.node(v).occupancy / (n * n));
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge(ei);
        bool iu = in_set[e.u], iv = in_set[e.v];
        if (iu == iv) continue; // internal and outside edges keep degrees
        if (iu)
            out.set_edge_degrees(ei, e.du * n, e.dv / n);
        else
            out.set_edge_degrees(ei, e.du / n, e.dv * n);
    }
    return out;
}

PartitionedGraph delta_double(const PartitionedGraph& g) {
    std::vector<int> label = bipartite_labels(g); // throws NotBipartiteError
    if (label[g.output()] != 0)
        throw EndsOnOddSideError("output lies on the odd-distance side");

    PartitionedGraph out = g;
    for (int v = 0; v < g.node_count(); ++v) {
        if (label[v] == 1) out.set_occupancy(v, g.node(v).occupancy * 2);
    }
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge(ei);
        if (label[e.u] == 0)
            out.set_edge_degrees(ei, e.du * 2, e.dv);
        else
            out.set_edge_degrees(ei, e.du, e.dv * 2);
    }
    if (g.delta_hint()) out.set_delta_hint(*g.delta_hint() * 2);
    return out;
}

PartitionedGraph apply_split(const PartitionedGraph& g, const std::string& node,
                             const std::vector<SplitPart>& parts) {
    int v = require_node(g, node);
    PartitionedGraph out;
    for (int i = 0; i < g.node_count(); ++i) {
        if (i == v) {
            for (std::size_t p = 0; p < parts.size(); ++p)
                out.add_node(node + "/" + std::to_string(p), parts[p].occupancy);
        } else {
            out.add_node(g.node(i).id, g.node(i).occupancy);
        }
    }
    for (const auto& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        out.add_edge(g.node(e.u).id, g.node(e.v).id, e.du, e.dv);
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (const auto& [neighbor, degree] : parts[p].degrees) {
            int t = g.find_node(neighbor);
            if (t < 0) throw PreconditionError("split references unknown neighbour " + neighbor);
            std::int64_t back = parts[p].occupancy * degree / g.node(t).occupancy;
            out.add_edge(node + "/" + std::to_string(p), neighbor, degree, back);
        }
    }
    if (g.input() >= 0) out.set_input(g.node(g.input()).id);
    if (g.output() >= 0) out.set_output(g.node(g.output()).id);
    if (g.delta_hint()) out.set_delta_hint(*g.delta_hint());
    return out;
}

std::vector<std::vector<SplitPart>> split_node_parts(const PartitionedGraph& g,
                                                     const std::string& node, int max_parts) {
    require_valid(g);
    int v = require_node(g, node);
    if (v == g.input() || v == g.output())
        throw PreconditionError("cannot split the input or output node");

    auto incident = incident_edges(g, v);
    std::sort(incident.begin(), incident.end(),
              [&](const IncidentEdge& a, const IncidentEdge& b) {
                  return g.node(a.other).id < g.node(b.other).id;
              });
    if (incident.empty()) return {};

    const std::int64_t base_degree = incident[0].near;
    // second moment to preserve: M_1 J_1^2 = N * d_1^2
    const std::int64_t target = g.node(v).occupancy * base_degree * base_degree;

    // alpha_j = d_j / d_1 in lowest terms
    struct NeighborInfo {
        std::int64_t occupancy;
        std::int64_t num;
        std::int64_t den;
    };
    std::vector<NeighborInfo> neighbors;
    std::int64_t step = 1;
    for (const auto& ie : incident) {
        std::int64_t ggcd = std::gcd(ie.near, base_degree);
        NeighborInfo info{g.node(ie.other).occupancy, ie.near / ggcd, base_degree / ggcd};
        step = std::lcm(step, info.den);
        neighbors.push_back(info);
    }

    // candidate (degree toward the base neighbour, admissible occupancies)
    struct Candidate {
        std::int64_t degree;
        std::int64_t quantum; // occupancies must be multiples of this
    };
    std::vector<Candidate> candidates;
    for (std::int64_t d = step; d * d <= target; d += step) {
        bool ok = true;
        std::int64_t quantum = 1;
        for (const auto& nb : neighbors) {
            std::int64_t dj = d / nb.den * nb.num;
            if (dj < 1 || dj > nb.occupancy) {
                ok = false;
                break;
            }
            quantum = std::lcm(quantum, nb.occupancy / std::gcd(nb.occupancy, dj));
        }
        if (ok && quantum * d * d <= target) candidates.push_back({d, quantum});
    }

    std::vector<std::vector<SplitPart>> results;
    std::vector<std::pair<std::int64_t, std::int64_t>> chosen; // (degree, occupancy)

    auto emit = [&]() {
        // skip the trivial replacement identical to the original node
        if (chosen.size() == 1 && chosen[0].first == base_degree &&
            chosen[0].second == g.node(v).occupancy)
            return;
        std::vector<SplitPart> parts;
        for (auto [d, occ] : chosen) {
            SplitPart part;
            part.occupancy = occ;
            for (std::size_t j = 0; j < neighbors.size(); ++j) {
                std::int64_t dj = d / neighbors[j].den * neighbors[j].num;
                part.degrees.emplace_back(g.node(incident[j].other).id, dj);
            }
            parts.push_back(std::move(part));
        }
        results.push_back(std::move(parts));
    };

    auto search = [&](auto&& self, std::size_t from, std::int64_t remaining) -> void {
        if (remaining == 0) {
            if (!chosen.empty()) emit();
            return;
        }
        if (chosen.size() == static_cast<std::size_t>(max_parts)) return;
        for (std::size_t c = from; c < candidates.size(); ++c) {
            std::int64_t dd = candidates[c].degree * candidates[c].degree;
            for (std::int64_t occ = candidates[c].quantum; occ * dd <= remaining;
                 occ += candidates[c].quantum) {
                chosen.emplace_back(candidates[c].degree, occ);
                self(self, c + 1, remaining - occ * dd);
                chosen.pop_back();
            }
        }
    };
    search(search, 0, target);

    auto total = [](const std::vector<SplitPart>& parts) {
        std::int64_t t = 0;
        for (const auto& p : parts) t += p.occupancy;
        return t;
    };
    std::stable_sort(results.begin(), results.end(),
                     [&](const auto& a, const auto& b) { return total(a) < total(b); });
    return results;
}

std::vector<PartitionedGraph> split_node(const PartitionedGraph& g, const std::string& node,
                                         int max_parts) {
    std::vector<PartitionedGraph> out;
    for (const auto& parts : split_node_parts(g, node, max_parts))
        out.push_back(apply_split(g, node, parts));
    return out;
}

PartitionedGraph cartesian_product(const PartitionedGraph& a, const PartitionedGraph& b) {
    require_valid(a);
    require_valid(b);
    if (!a.delta_hint() || !b.delta_hint() || *a.delta_hint() != *b.delta_hint())
        throw DeltaMismatchError("factors must carry the same delta hint");

    auto pair_id = [&](int i, int j) {
        return "(" + a.node(i).id + "," + b.node(j).id + ")";
    };
    PartitionedGraph out;
    for (int i = 0; i < a.node_count(); ++i) {
        for (int j = 0; j < b.node_count(); ++j)
            out.add_node(pair_id(i, j), a.node(i).occupancy * b.node(j).occupancy);
    }
    for (const auto& e : a.edges()) {
        for (int j = 0; j < b.node_count(); ++j)
            out.add_edge(pair_id(e.u, j), pair_id(e.v, j), e.du, e.dv);
    }
    for (int i = 0; i < a.node_count(); ++i) {
        for (const auto& e : b.edges())
            out.add_edge(pair_id(i, e.u), pair_id(i, e.v), e.du, e.dv);
    }
    out.set_input(pair_id(a.input(), b.input()));
    out.set_output(pair_id(a.output(), b.output()));
    out.set_delta_hint(*a.delta_hint());
    return out;
}

PartitionedGraph symmetrize_square(const PartitionedGraph& g) {
    require_valid(g);
    const int n = g.node_count();
    auto class_index = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * n + j - i * (i + 1) / 2; // row-major upper triangle
    };
    auto class_id = [&](int i, int j) {
        if (i == j) return "(" + g.node(i).id + "," + g.node(i).id + ")";
        if (i > j) std::swap(i, j);
        return "{" + g.node(i).id + "," + g.node(j).id + "}";
    };

    PartitionedGraph out;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::int64_t occ = g.node(i).occupancy * g.node(j).occupancy;
            out.add_node(class_id(i, j), i == j ? occ : 2 * occ);
        }
    }

    // aggregate product edges by class; every member of a class must see the
    // same total degree toward each neighbouring class
    std::map<std::pair<int, int>, std::map<int, std::int64_t>> degree; // class -> class -> deg
    auto accumulate = [&](int i, int j) {
        auto& mine = degree[{std::min(i, j), std::max(i, j)}];
        std::map<int, std::int64_t> seen;
        for (const auto& ie : incident_edges(g, i)) seen[class_index(ie.other, j)] += ie.near;
        for (const auto& ie : incident_edges(g, j)) seen[class_index(i, ie.other)] += ie.near;
        if (mine.empty())
            mine = seen;
        else if (mine != seen)
            throw InvalidGraphError("square symmetrization is not equitable");
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) accumulate(i, j);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            int x = class_index(i, j);
            for (const auto& [y, deg] : degree[{i, j}]) {
                if (y <= x) continue; // add each unordered pair once
                int yi = 0, yj = 0;
                for (int p = 0, idx = 0; p < n; ++p) {
                    for (int q = p; q < n; ++q, ++idx) {
                        if (idx == y) {
                            yi = p;
                            yj = q;
                        }
                    }
                }
                auto it = degree[{yi, yj}].find(x);
                if (it == degree[{yi, yj}].end())
                    throw InvalidGraphError("asymmetric class adjacency");
                out.add_edge(x, y, deg, it->second);
            }
        }
    }

    out.set_input(class_id(g.input(), g.input()));
    out.set_output(class_id(g.output(), g.output()));
    if (g.delta_hint()) out.set_delta_hint(*g.delta_hint());
    return out;
}

namespace {

std::uint64_t fnv64(std::uint64_t h, std::uint64_t value) {
    for (int b = 0; b < 8; ++b) {
        h ^= (value >> (8 * b)) & 0xffu;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::uint64_t canonical_key(const PartitionedGraph& g) {
    const int n = g.node_count();
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) {
        std::uint64_t h = 1469598103934665603ull;
        h = fnv64(h, static_cast<std::uint64_t>(g.node(v).occupancy));
        h = fnv64(h, v == g.input() ? 1 : v == g.output() ? 2 : 0);
        color[v] = h;
    }
    int rounds = 2;
    for (int t = n; t > 1; t /= 2) ++rounds;
    for (int round = 0; round < rounds; ++round) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> sig;
            for (const auto& ie : g.incidence()[v]) {
                const auto& e = g.edge(ie);
                int other = e.u == v ? e.v : e.u;
                std::int64_t near = e.u == v ? e.du : e.dv;
                std::int64_t far = e.u == v ? e.dv : e.du;
                std::uint64_t h = fnv64(fnv64(static_cast<std::uint64_t>(near) * 0x9e3779b97f4a7c15ull,
                                              static_cast<std::uint64_t>(far)),
                                        color[other]);
                sig.push_back(h);
            }
            std::sort(sig.begin(), sig.end());
            std::uint64_t h = color[v];
            for (std::uint64_t s : sig) h = fnv64(h, s);
            next[v] = h;
        }
        color = std::move(next);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return g.node(a).id < g.node(b).id;
    });
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[order[i]] = i;

    std::uint64_t h = 1469598103934665603ull;
    h = fnv64(h, static_cast<std::uint64_t>(n));
    h = fnv64(h, g.delta_hint() ? static_cast<std::uint64_t>(*g.delta_hint()) : 0);
    for (int i = 0; i < n; ++i)
        h = fnv64(h, static_cast<std::uint64_t>(g.node(order[i]).occupancy));
    std::vector<std::array<std::uint64_t, 4>> edges;
    for (const auto& e : g.edges()) {
        std::uint64_t pu = position[e.u], pv = position[e.v];
        std::uint64_t du = e.du, dv = e.dv;
        if (pu > pv) {
            std::swap(pu, pv);
            std::swap(du, dv);
        }
        edges.push_back({pu, pv, du, dv});
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        for (std::uint64_t x : e) h = fnv64(h, x);
    }
    return h;
}

std::string canonical_hash(const PartitionedGraph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(canonical_key(g)));
    return buf;
}

namespace {

std::int64_t total_occupancy(const PartitionedGraph& g) {
    std::int64_t total = 0;
    for (const auto& node : g.nodes()) total += node.occupancy;
    return total;
}

std::int64_t occupancy_kernel(std::int64_t occ, const std::vector<std::int64_t>& factors) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::int64_t f : factors) {
            while (occ % (f * f) == 0) {
                occ /= f * f;
                progress = true;
            }
        }
    }
    return occ;
}

/// Unreachable lower bound: every non-end node shrunk to its square-free kernel.
std::int64_t kernel_floor(const PartitionedGraph& g, const std::vector<std::int64_t>& factors) {
    std::int64_t total = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        std::int64_t occ = g.node(v).occupancy;
        total += (v == g.input() || v == g.output()) ? occ : occupancy_kernel(occ, factors);
    }
    return total;
}

struct Move {
    std::string rule;
    std::vector<std::string> nodes;
    std::int64_t factor = 0;
    std::int64_t gain = 0; // positive = vertex-count decrease
};

/// Largest node set reducible by n^2 in one grouped application, obtained by
/// deleting violating nodes until the boundary conditions stabilize.
std::vector<std::vector<int>> maximal_subgraph_components(const PartitionedGraph& g,
                                                          std::int64_t n) {
    std::vector<char> in_set(g.node_count(), 0);
    for (int v = 0; v < g.node_count(); ++v) {
        in_set[v] = v != g.input() && v != g.output() &&
                    g.node(v).occupancy % (n * n) == 0;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.node_count() && !changed; ++v) {
            if (!in_set[v]) continue;
            for (const auto& ie : incident_edges(g, v)) {
                if (in_set[ie.other]) {
                    // internal bound after reduction
                    if (ie.near * n * n > g.node(ie.other).occupancy) {
                        in_set[v] = 0;
                        changed = true;
                        break;
                    }
                } else {
                    if (ie.far % n != 0 || n * ie.near > g.node(ie.other).occupancy) {
                        in_set[v] = 0;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    // connected components of the surviving set
    std::vector<std::vector<int>> components;
    std::vector<char> seen(g.node_count(), 0);
    for (int v = 0; v < g.node_count(); ++v) {
        if (!in_set[v] || seen[v]) continue;
        std::vector<int> comp, stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (const auto& ie : incident_edges(g, x)) {
                if (in_set[ie.other] && !seen[ie.other]) {
                    seen[ie.other] = 1;
                    stack.push_back(ie.other);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

std::vector<Move> generate_moves(const PartitionedGraph& g, const SearchOptions& options,
                                 const std::map<std::string, std::int64_t>& initial_occupancy) {
    std::vector<Move> moves;
    for (std::int64_t n : options.factors) {
        for (int v = 0; v < g.node_count(); ++v) {
            if (v == g.input() || v == g.output()) continue;
            if (!reduce_violation(g, v, n)) {
                std::int64_t occ = g.node(v).occupancy;
                moves.push_back({"reduce", {g.node(v).id}, n, occ - occ / (n * n)});
            }
        }
        for (const auto& comp : maximal_subgraph_components(g, n)) {
            if (comp.size() < 2) continue; // singletons equal the plain rule
            Move m{"reduce-subgraph", {}, n, 0};
            for (int v : comp) {
                std::int64_t occ = g.node(v).occupancy;
                m.nodes.push_back(g.node(v).id);
                m.gain += occ - occ / (n * n);
            }
            moves.push_back(std::move(m));
        }
        for (int v = 0; v < g.node_count(); ++v) {
            if (v == g.input() || v == g.output()) continue;
            std::int64_t occ = g.node(v).occupancy;
            auto it = initial_occupancy.find(g.node(v).id);
            std::int64_t cap = (it != initial_occupancy.end() ? it->second : occ) *
                               options.reverse_growth_cap;
            if (occ * n * n > cap) continue;
            if (!reverse_violation(g, v, n))
                moves.push_back({"reduce-reverse", {g.node(v).id}, n, occ - occ * n * n});
        }
    }
    std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
        if (a.gain != b.gain) return a.gain > b.gain;
        if (a.rule != b.rule) return a.rule < b.rule;
        return a.nodes < b.nodes;
    });
    return moves;
}

PartitionedGraph apply_move(const PartitionedGraph& g, const Move& m) {
    if (m.rule == "reduce") return reduce_node(g, m.nodes[0], m.factor);
    if (m.rule == "reduce-reverse") return reduce_node_reverse(g, m.nodes[0], m.factor);
    return reduce_subgraph(g, m.nodes, m.factor);
}

RewriteStep to_step(const Move& m, std::int64_t before) {
    RewriteStep step;
    step.rule = m.rule;
    step.nodes = m.nodes;
    step.factor = m.factor;
    step.before = before;
    step.after = before - m.gain;
    return step;
}

struct SearchContext {
    const SearchOptions& options;
    std::map<std::string, std::int64_t> initial_occupancy;
    std::unordered_set<std::uint64_t> visited;
    std::int64_t expanded = 0;
    bool out_of_budget = false; // global stop
    bool truncated = false;     // any branch cut by depth or budget
    std::int64_t best_count = 0;
    PartitionedGraph best_graph;
    std::vector<RewriteStep> best_steps;
    std::vector<RewriteStep> path;

    void dfs(const PartitionedGraph& g, std::int64_t depth) {
        if (!visited.insert(canonical_key(g)).second) return;
        std::int64_t count = total_occupancy(g);
        if (count < best_count) {
            best_count = count;
            best_graph = g;
            best_steps = path;
        }
        if (kernel_floor(g, options.factors) >= best_count) return;
        if (depth >= options.max_depth) {
            truncated = true;
            return;
        }
        for (const auto& move : generate_moves(g, options, initial_occupancy)) {
            if (out_of_budget) return;
            if (++expanded > options.budget) {
                out_of_budget = true;
                truncated = true;
                return;
            }
            path.push_back(to_step(move, count));
            dfs(apply_move(g, move), depth + 1);
            path.pop_back();
        }
    }
};

} // namespace

SearchResult reduce_search(const PartitionedGraph& g, const SearchOptions& options) {
    require_valid(g);
    SearchResult result;
    result.trace.initial_hash = canonical_hash(g);

    std::map<std::string, std::int64_t> initial_occupancy;
    for (const auto& node : g.nodes()) initial_occupancy[node.id] = node.occupancy;

    if (options.strategy == SearchOptions::Strategy::kGreedy) {
        PartitionedGraph current = g;
        std::int64_t count = total_occupancy(current);
        bool progress = true;
        std::int64_t applied = 0;
        while (progress) {
            progress = false;
            auto moves = generate_moves(current, options, initial_occupancy);
            for (const auto& move : moves) {
                if (move.gain <= 0) break; // greedy never grows the graph
                if (++applied > options.budget) {
                    result.budget_exceeded = true;
                    break;
                }
                result.trace.steps.push_back(to_step(move, count));
                current = apply_move(current, move);
                count -= move.gain;
                progress = true;
                break;
            }
            if (result.budget_exceeded) break;
        }
        result.graph = std::move(current);
        result.best_count = count;
    } else {
        SearchContext ctx{options, std::move(initial_occupancy), {}, 0, false, false,
                          total_occupancy(g), g, {}, {}};
        ctx.dfs(g, 0);
        result.graph = std::move(ctx.best_graph);
        result.trace.steps = std::move(ctx.best_steps);
        result.budget_exceeded = ctx.truncated;
        result.best_count = ctx.best_count;
    }
    result.trace.final_count = result.best_count;
    return result;
}

PartitionedGraph apply_step(const PartitionedGraph& g, const RewriteStep& step) {
    if (step.rule == "reduce") return reduce_node(g, step.nodes.at(0), step.factor);
    if (step.rule == "reduce-reverse")
        return reduce_node_reverse(g, step.nodes.at(0), step.factor);
    if (step.rule == "reduce-subgraph") return reduce_subgraph(g, step.nodes, step.factor);
    if (step.rule == "delta-double") return delta_double(g);
    if (step.rule == "node-split") return apply_split(g, step.nodes.at(0), step.parts);
    if (step.rule == "symmetrize") return symmetrize_square(g);
    throw Error("unknown rewrite rule: " + step.rule);
}

} // namespace pst
