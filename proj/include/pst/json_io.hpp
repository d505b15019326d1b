#pragma once

#include <string>

#include <json.hpp>

#include "pst/partitioned_graph.hpp"
#include "pst/rewrite.hpp"
#include "pst/spectral.hpp"

namespace pst {

using Json = nlohmann::ordered_json;

Json to_json(const PartitionedGraph& g);
PartitionedGraph partitioned_graph_from_json(const Json& j);

Json to_json(const WeightedGraph& g);
WeightedGraph weighted_graph_from_json(const Json& j);

Json to_json(const ValidationReport& report);
Json to_json(const SpectrumReport& report);
Json to_json(const RewriteStep& step);
RewriteStep step_from_json(const Json& j);

/// Explicit-graph text format: "N <count> IN <idx> OUT <idx>" then one
/// "u v" pair per line, 0-indexed with u < v.
std::string to_edge_list(const ExplicitGraph& g);
ExplicitGraph explicit_graph_from_edge_list(const std::string& text);

std::string to_dot(const PartitionedGraph& g);
std::string to_dot(const ExplicitGraph& g);

/// Trace file: one header line {"init": ...} then one step per line.
std::string to_jsonl(const RewriteTrace& trace);
RewriteTrace trace_from_jsonl(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace pst
