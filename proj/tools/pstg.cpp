// Command-line front end: construction, rewriting, verification, bounds and
// export of perfect-state-transfer partitioned graphs.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pst/bounds.hpp"
#include "pst/catalog.hpp"
#include "pst/exact.hpp"
#include "pst/json_io.hpp"
#include "pst/rewrite.hpp"
#include "pst/spectral.hpp"

namespace {

using pst::Json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        pst::write_file(out_path, text);
}

void emit_json(const Json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

pst::PartitionedGraph load_partitioned(const std::string& path) {
    return pst::partitioned_graph_from_json(Json::parse(pst::read_file(path)));
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
    std::vector<std::int64_t> out;
    std::string token;
    for (char c : csv) {
        if (c == ',') {
            out.push_back(std::stoll(token));
            token.clear();
        } else {
            token += c;
        }
    }
    if (!token.empty()) out.push_back(std::stoll(token));
    return out;
}

Json trace_report(const pst::SearchResult& result, std::int64_t initial_count) {
    Json j;
    j["initial_count"] = initial_count;
    j["final_count"] = result.best_count;
    j["budget_exceeded"] = result.budget_exceeded;
    j["initial_hash"] = result.trace.initial_hash;
    Json steps = Json::array();
    for (const auto& s : result.trace.steps) steps.push_back(pst::to_json(s));
    j["steps"] = steps;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect-state-transfer graph workbench"};
    app.require_subcommand(1);

    std::string in_path, in_path2, out_path, trace_path, family, node_id;
    std::string build_format = "json", expand_format = "edges";
    std::string set_csv, factors_csv = "2", strategy = "exhaustive";
    int dim = 0, max_parts = 3, k_max = 8, scan_points = 100000;
    std::int64_t budget = 200000, delta = 0, degree = 0;
    double tol = 0.0;
    bool explicit_graph = false;

    auto* build = app.add_subcommand("build", "construct a catalog family");
    build->add_option("family", family)->required();
    build->add_option("--dim", dim);
    build->add_option("-o", out_path);
    build->add_option("--format", build_format)->check(CLI::IsMember({"json", "dot"}));

    auto* validate_cmd = app.add_subcommand("validate", "check partition invariants");
    validate_cmd->add_option("graph", in_path)->required();

    auto* quotient_cmd = app.add_subcommand("quotient", "weighted quotient graph");
    quotient_cmd->add_option("graph", in_path)->required();
    quotient_cmd->add_option("-o", out_path);

    auto* expand_cmd = app.add_subcommand("expand", "explicit canonical realization");
    expand_cmd->add_option("graph", in_path)->required();
    expand_cmd->add_option("-o", out_path);
    expand_cmd->add_option("--format", expand_format)->check(CLI::IsMember({"edges", "dot", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "certify state transfer");
    verify_cmd->add_option("graph", in_path)->required();
    verify_cmd->add_flag("--explicit", explicit_graph, "input is an explicit edge list");
    verify_cmd->add_option("--tol", tol);
    verify_cmd->add_option("--scan-points", scan_points);
    verify_cmd->add_option("-o", out_path);

    auto* reduce_cmd = app.add_subcommand("reduce", "search for vertex-count reductions");
    reduce_cmd->add_option("graph", in_path)->required();
    reduce_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"greedy", "exhaustive"}));
    reduce_cmd->add_option("--budget", budget);
    reduce_cmd->add_option("--factors", factors_csv, "square factors to try, e.g. 2,3");
    reduce_cmd->add_option("-o", out_path);
    reduce_cmd->add_option("--trace", trace_path);

    auto* lift_cmd = app.add_subcommand("lift", "delta-doubling lift");
    lift_cmd->add_option("graph", in_path)->required();
    lift_cmd->add_option("-o", out_path);

    auto* split_cmd = app.add_subcommand("split", "split one node, applying the best result");
    split_cmd->add_option("graph", in_path)->required();
    split_cmd->add_option("--node", node_id)->required();
    split_cmd->add_option("--max-parts", max_parts);
    split_cmd->add_option("-o", out_path);

    auto* product_cmd = app.add_subcommand("product", "Cartesian product of two partitions");
    product_cmd->add_option("first", in_path)->required();
    product_cmd->add_option("second", in_path2)->required();
    product_cmd->add_option("-o", out_path);

    auto* symmetrize_cmd = app.add_subcommand("symmetrize", "symmetrized square");
    symmetrize_cmd->add_option("graph", in_path)->required();
    symmetrize_cmd->add_option("-o", out_path);

    auto* stats_cmd = app.add_subcommand("stats", "counts, efficiency and bounds verdicts");
    stats_cmd->add_option("graph", in_path)->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate bounds for given parameters");
    bounds_cmd->add_option("--dim", dim)->required();
    bounds_cmd->add_option("--delta", delta);
    bounds_cmd->add_option("--degree", degree);

    auto* helper_cmd = app.add_subcommand("helper-r", "exact R of an integer set");
    helper_cmd->add_option("--set", set_csv)->required();

    auto* column_cmd = app.add_subcommand("search-column", "minimal column count brute force");
    column_cmd->add_option("--dim", dim)->required();
    column_cmd->add_option("--max-k", k_max);

    auto* replay_cmd = app.add_subcommand("replay", "replay a rewrite trace");
    replay_cmd->add_option("graph", in_path)->required();
    replay_cmd->add_option("trace", trace_path)->required();
    replay_cmd->add_option("-o", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (*build) {
            if (family == "standard-chain") {
                emit_json(pst::to_json(pst::standard_chain(dim)), out_path);
            } else {
                auto g = pst::build_family(family, dim);
                if (build_format == "dot")
                    emit(pst::to_dot(g), out_path);
                else
                    emit_json(pst::to_json(g), out_path);
            }
        } else if (*validate_cmd) {
            auto report = pst::validate(load_partitioned(in_path));
            emit_json(pst::to_json(report), out_path);
            return report.ok() ? 0 : 1;
        } else if (*quotient_cmd) {
            emit_json(pst::to_json(pst::quotient(load_partitioned(in_path))), out_path);
        } else if (*expand_cmd) {
            auto g = load_partitioned(in_path);
            auto eg = pst::expand(g);
            if (expand_format == "dot") {
                emit(pst::to_dot(eg), out_path);
            } else if (expand_format == "json") {
                Json j;
                j["vertex_count"] = eg.vertex_count;
                j["input"] = eg.input;
                j["output"] = eg.output;
                j["distances_consistent"] = pst::explicit_distances_consistent(eg, g);
                emit_json(j, out_path);
            } else {
                emit(pst::to_edge_list(eg), out_path);
            }
        } else if (*verify_cmd) {
            pst::WeightedGraph wg;
            if (explicit_graph) {
                wg = pst::adjacency(pst::explicit_graph_from_edge_list(pst::read_file(in_path)));
            } else {
                Json j = Json::parse(pst::read_file(in_path));
                wg = j.contains("size") ? pst::weighted_graph_from_json(j)
                                        : pst::quotient(pst::partitioned_graph_from_json(j));
            }
            pst::SpectralTolerances tols;
            if (tol > 0.0) tols.fidelity_small = tols.fidelity_large = tol;
            auto report = pst::certify(wg, tols, scan_points);
            emit_json(pst::to_json(report), out_path);
        } else if (*reduce_cmd) {
            auto g = load_partitioned(in_path);
            pst::SearchOptions options;
            options.strategy = strategy == "greedy" ? pst::SearchOptions::Strategy::kGreedy
                                                    : pst::SearchOptions::Strategy::kExhaustive;
            options.budget = budget;
            options.factors = parse_int_list(factors_csv);
            auto result = pst::reduce_search(g, options);
            std::int64_t initial = 0;
            for (const auto& n : g.nodes()) initial += n.occupancy;
            emit_json(trace_report(result, initial), "");
            if (!out_path.empty()) emit_json(pst::to_json(result.graph), out_path);
            if (!trace_path.empty()) emit(pst::to_jsonl(result.trace), trace_path);
        } else if (*lift_cmd) {
            emit_json(pst::to_json(pst::delta_double(load_partitioned(in_path))), out_path);
        } else if (*split_cmd) {
            auto g = load_partitioned(in_path);
            auto parts = pst::split_node_parts(g, node_id, max_parts);
            Json j;
            j["node"] = node_id;
            j["candidates"] = Json::array();
            for (const auto& p : parts) {
                std::int64_t total = 0;
                for (const auto& part : p) total += part.occupancy;
                j["candidates"].push_back(total);
            }
            if (parts.empty()) {
                j["applied"] = false;
                emit_json(j, "");
                return 1;
            }
            auto best = pst::apply_split(g, node_id, parts.front());
            j["applied"] = true;
            j["final_count"] = pst::vertex_count(best).to_string();
            emit_json(j, "");
            if (!out_path.empty()) emit_json(pst::to_json(best), out_path);
        } else if (*product_cmd) {
            auto g = pst::cartesian_product(load_partitioned(in_path), load_partitioned(in_path2));
            emit_json(pst::to_json(g), out_path);
        } else if (*symmetrize_cmd) {
            emit_json(pst::to_json(pst::symmetrize_square(load_partitioned(in_path))), out_path);
        } else if (*stats_cmd) {
            auto g = load_partitioned(in_path);
            std::optional<std::int64_t> fitted;
            if (!g.delta_hint()) {
                auto q = pst::quotient(g);
                if (auto fit = pst::fit_quadratic_spectrum(pst::eigensystem(q), q.input))
                    fitted = fit->delta;
            }
            auto report = pst::bounds_report(g, fitted);
            Json j;
            j["vertex_count"] = report.vertex_total.to_string();
            j["transfer_distance"] = report.transfer_distance;
            j["max_degree"] = report.max_degree;
            if (report.delta)
                j["delta"] = *report.delta;
            else
                j["delta"] = nullptr;
            j["edge_count"] = report.edge_total.to_string();
            j["eta"] = report.eta;
            j["degree_distance_ok"] = report.degree_distance_ok;
            j["parity_ok"] = report.parity.accepted;
            if (!report.parity.reason.empty()) j["parity_reason"] = report.parity.reason;
            j["edge_bound"] = report.edge_bound.to_string();
            j["edge_bound_ok"] = report.edge_bound_ok;
            emit_json(j, out_path);
        } else if (*bounds_cmd) {
            Json j;
            j["distance"] = dim;
            auto m = pst::edge_lower_bound(dim);
            j["edge_lower_bound"] = m.to_string();
            j["min_vertices_implied"] = pst::min_vertices_for_edges(m);
            if (delta > 0) {
                auto verdict = pst::parity_theorem_check(delta, dim, true);
                j["parity_ok"] = verdict.accepted;
                if (!verdict.reason.empty()) j["parity_reason"] = verdict.reason;
            }
            if (degree > 0 && delta > 0)
                j["degree_distance_bound"] = pst::degree_distance_bound(degree, delta);
            emit_json(j, out_path);
        } else if (*helper_cmd) {
            auto lambdas = parse_int_list(set_csv);
            auto r = pst::rational_sum_of_reciprocal_products(lambdas);
            Json j;
            j["set"] = lambdas;
            j["r"] = r.to_string();
            j["two_adic_valuation"] = pst::two_adic_valuation(r);
            j["admissible"] = pst::lambda_set_admissible(lambdas);
            if (pst::lambda_set_admissible(lambdas))
                j["parity_check"] = pst::admissible_parity_check(lambdas);
            emit_json(j, out_path);
        } else if (*column_cmd) {
            auto result = pst::minimal_column_count(dim, k_max);
            Json j;
            j["distance"] = dim;
            j["target"] = result.target;
            if (result.k) {
                j["k"] = *result.k;
                j["witness"] = result.witness;
            } else {
                j["k"] = nullptr;
                j["searched_up_to"] = k_max;
            }
            emit_json(j, out_path);
        } else if (*replay_cmd) {
            auto g = load_partitioned(in_path);
            auto trace = pst::trace_from_jsonl(pst::read_file(trace_path));
            if (pst::canonical_hash(g) != trace.initial_hash)
                throw pst::PreconditionError("trace was recorded on a different graph");
            for (const auto& step : trace.steps) g = pst::apply_step(g, step);
            std::int64_t count = 0;
            for (const auto& n : g.nodes()) count += n.occupancy;
            if (count != trace.final_count)
                throw pst::PreconditionError("replayed count differs from the recorded one");
            emit_json(pst::to_json(g), out_path);
        }
    } catch (const pst::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pst::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
