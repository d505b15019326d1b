#include "pst/json_io.hpp"

#include <fstream>
#include <sstream>

namespace pst {

Json to_json(const PartitionedGraph& g) {
    Json j;
    if (g.delta_hint()) j["delta"] = *g.delta_hint();
    j["nodes"] = Json::array();
    for (const auto& n : g.nodes()) j["nodes"].push_back({{"id", n.id}, {"occupancy", n.occupancy}});
    j["edges"] = Json::array();
    for (const auto& e : g.edges()) {
        j["edges"].push_back({{"u", g.node(e.u).id},
                              {"v", g.node(e.v).id},
                              {"du", e.du},
                              {"dv", e.dv}});
    }
    j["input"] = g.input() >= 0 ? g.node(g.input()).id : "";
    j["output"] = g.output() >= 0 ? g.node(g.output()).id : "";
    return j;
}

PartitionedGraph partitioned_graph_from_json(const Json& j) {
    PartitionedGraph g;
    for (const auto& n : j.at("nodes"))
        g.add_node(n.at("id").get<std::string>(), n.at("occupancy").get<std::int64_t>());
    for (const auto& e : j.at("edges")) {
        g.add_edge(e.at("u").get<std::string>(), e.at("v").get<std::string>(),
                   e.at("du").get<std::int64_t>(), e.at("dv").get<std::int64_t>());
    }
    g.set_input(j.at("input").get<std::string>());
    g.set_output(j.at("output").get<std::string>());
    if (j.contains("delta")) g.set_delta_hint(j.at("delta").get<std::int64_t>());
    return g;
}

Json to_json(const WeightedGraph& g) {
    Json j;
    j["size"] = g.size();
    j["input"] = g.input;
    j["output"] = g.output;
    j["edges"] = Json::array();
    for (int u = 0; u < g.size(); ++u) {
        for (int v = u + 1; v < g.size(); ++v) {
            if (g.weights(u, v) != 0.0)
                j["edges"].push_back({{"u", u}, {"v", v}, {"w", g.weights(u, v)}});
        }
    }
    return j;
}

WeightedGraph weighted_graph_from_json(const Json& j) {
    WeightedGraph g;
    int size = j.at("size").get<int>();
    g.weights = Eigen::MatrixXd::Zero(size, size);
    for (const auto& e : j.at("edges")) {
        int u = e.at("u").get<int>(), v = e.at("v").get<int>();
        double w = e.at("w").get<double>();
        g.weights(u, v) = w;
        g.weights(v, u) = w;
    }
    g.input = j.at("input").get<int>();
    g.output = j.at("output").get<int>();
    return g;
}

Json to_json(const ValidationReport& report) {
    Json j;
    j["valid"] = report.ok();
    j["violations"] = report.violations;
    j["input_occupancy_one"] = report.input_occupancy_one;
    j["output_occupancy_one"] = report.output_occupancy_one;
    return j;
}

Json to_json(const SpectrumReport& report) {
    Json j;
    j["size"] = report.size;
    j["eigenvalues"] = report.eigenvalues;
    j["support"] = report.support;
    Json signs = Json::array();
    for (const auto& s : report.cospectrality_sign) {
        if (s)
            signs.push_back(*s);
        else
            signs.push_back(nullptr);
    }
    j["cospectrality_signs"] = signs;
    if (report.fit) {
        j["fit"] = {{"alpha", report.fit->alpha},
                    {"beta", report.fit->beta},
                    {"delta", report.fit->delta}};
    } else {
        j["fit"] = nullptr;
    }
    j["sign_parity_consistent"] = report.sign_parity_consistent;
    j["support_simple"] = report.support_simple;
    j["support_size"] = report.support_size;
    j["eccentricity"] = report.eccentricity;
    j["spectrally_extremal"] = report.spectrally_extremal;
    j["transfer_time"] = report.transfer_time;
    j["revival_time"] = report.revival_time;
    j["fidelity_at_transfer"] = report.fidelity_at_transfer;
    j["revival_fidelity"] = report.revival_fidelity;
    j["max_scan_fidelity"] = report.max_scan_fidelity;
    j["max_scan_time"] = report.max_scan_time;
    j["tolerance"] = report.tolerance;
    j["verdict"] = to_string(report.verdict);
    return j;
}

Json to_json(const RewriteStep& step) {
    Json j;
    j["rule"] = step.rule;
    j["nodes"] = step.nodes;
    if (step.factor) j["factor"] = step.factor;
    if (!step.parts.empty()) {
        Json parts = Json::array();
        for (const auto& p : step.parts) {
            Json degrees = Json::array();
            for (const auto& [id, d] : p.degrees) degrees.push_back({{"to", id}, {"degree", d}});
            parts.push_back({{"occupancy", p.occupancy}, {"degrees", degrees}});
        }
        j["parts"] = parts;
    }
    j["before"] = step.before;
    j["after"] = step.after;
    return j;
}

RewriteStep step_from_json(const Json& j) {
    RewriteStep step;
    step.rule = j.at("rule").get<std::string>();
    step.nodes = j.at("nodes").get<std::vector<std::string>>();
    if (j.contains("factor")) step.factor = j.at("factor").get<std::int64_t>();
    if (j.contains("parts")) {
        for (const auto& p : j.at("parts")) {
            SplitPart part;
            part.occupancy = p.at("occupancy").get<std::int64_t>();
            for (const auto& d : p.at("degrees"))
                part.degrees.emplace_back(d.at("to").get<std::string>(),
                                          d.at("degree").get<std::int64_t>());
            step.parts.push_back(std::move(part));
        }
    }
    step.before = j.at("before").get<std::int64_t>();
    step.after = j.at("after").get<std::int64_t>();
    return step;
}

std::string to_edge_list(const ExplicitGraph& g) {
    std::ostringstream out;
    out << "N " << g.vertex_count << " IN " << g.input << " OUT " << g.output << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

ExplicitGraph explicit_graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    ExplicitGraph g;
    std::string n_tag, in_tag, out_tag;
    if (!(in >> n_tag >> g.vertex_count >> in_tag >> g.input >> out_tag >> g.output) ||
        n_tag != "N" || in_tag != "IN" || out_tag != "OUT")
        throw IoError("malformed explicit-graph header");
    std::int64_t u, v;
    while (in >> u >> v) {
        if (u >= v || v >= g.vertex_count) throw IoError("malformed edge line");
        g.edges.emplace_back(u, v);
    }
    g.node_of.assign(g.vertex_count, 0);
    return g;
}

std::string to_dot(const PartitionedGraph& g) {
    std::ostringstream out;
    out << "graph partition {\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out << "  n" << v << " [label=\"" << g.node(v).id << "\\n" << g.node(v).occupancy
            << "\"";
        if (v == g.input()) out << " shape=doublecircle";
        if (v == g.output()) out << " shape=doubleoctagon";
        out << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.du << "," << e.dv
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const ExplicitGraph& g) {
    std::ostringstream out;
    out << "graph explicit {\n";
    for (auto [u, v] : g.edges) out << "  v" << u << " -- v" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_jsonl(const RewriteTrace& trace) {
    std::ostringstream out;
    Json head;
    head["init"] = {{"hash", trace.initial_hash}, {"final_count", trace.final_count}};
    out << head.dump() << "\n";
    for (const auto& step : trace.steps) out << to_json(step).dump() << "\n";
    return out.str();
}

RewriteTrace trace_from_jsonl(const std::string& text) {
    RewriteTrace trace;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line);
        if (first) {
            trace.initial_hash = j.at("init").at("hash").get<std::string>();
            trace.final_count = j.at("init").at("final_count").get<std::int64_t>();
            first = false;
        } else {
            trace.steps.push_back(step_from_json(j));
        }
    }
    if (first) throw IoError("empty trace file");
    return trace;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << content;
}

} // namespace pst
