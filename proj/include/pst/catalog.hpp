#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "pst/partitioned_graph.hpp"

namespace pst {

/// Distance partition of the D-dimensional P2 hypercube: a path of D+1
/// nodes with binomial occupancies.
PartitionedGraph p2_hypercube_chain(int dimension);

/// Distance partition of the P3 hypercube of dimension half_d (transfer
/// distance 2*half_d). Nodes are labelled "(n0,n2)".
PartitionedGraph p3_grid(int half_d);

/// Engineered chain with couplings sqrt((n+1)(D-n)) on D+1 vertices.
WeightedGraph standard_chain(int distance);

/// The 13-vertex distance-4 transfer graph.
PartitionedGraph coutinho_graph();

/// The distance-32 half-grid with hand-optimized occupancies; 680913 vertices.
PartitionedGraph fig6_grid();

/// Degrees (d1, d2) with d1*d2 = jsq and n1*d1 = n2*d2.
/// Throws NonIntegralDegreesError when no integral pair exists.
std::pair<std::int64_t, std::int64_t> infer_degrees(std::int64_t n1, std::int64_t n2,
                                                    std::int64_t jsq);

/// Alternating-occupancy revival chain on 2*param nodes. The family is
/// extrapolated from its param = 5 member; occupancies at even positions run
/// param, param-1, ..., odd positions 1, 2, ...
PartitionedGraph stevanovic(int param);

/// Build a catalog family by name ("p2-chain", "p3-grid", "coutinho",
/// "fig6-grid", "stevanovic"). Throws on unknown names.
PartitionedGraph build_family(const std::string& family, int parameter);

} // namespace pst
