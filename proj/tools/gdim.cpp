// gdim: graph invariants around metric dimension and domination.
//
// Exit codes: 0 success, 1 usage, 2 input parse error, 3 budget exhausted,
// 4 anomaly (an internal theorem-contradiction guard fired).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdim/gdim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitAnomaly = 4;

// Budgets are wall-clock milliseconds converted to a deterministic work-unit
// cap, so identical budgets give identical results on any machine.
constexpr std::uint64_t kSubsetsPerMs = 20000;

gdim::Budget to_budget(std::optional<std::uint64_t> budget_ms) {
    if (!budget_ms) return {};
    return *budget_ms * kSubsetsPerMs;
}

gdim::Graph make_family(const std::string& family, const std::vector<std::string>& params,
                        std::uint64_t seed) {
    auto as_int = [&](std::size_t i) { return std::stoi(params.at(i)); };
    auto need = [&](std::size_t arity) {
        if (params.size() != arity)
            throw gdim::GraphError("family '" + family + "' takes " + std::to_string(arity) +
                                   " parameter(s)");
    };
    using namespace gdim::gen;
    if (family == "complete") { need(1); return complete(as_int(0)); }
    if (family == "complete_bipartite") { need(2); return complete_bipartite(as_int(0), as_int(1)); }
    if (family == "path") { need(1); return path(as_int(0)); }
    if (family == "cycle") { need(1); return cycle(as_int(0)); }
    if (family == "star") { need(1); return star(as_int(0)); }
    if (family == "kneser") { need(2); return kneser(as_int(0), as_int(1)); }
    if (family == "subdivided_wheel") { need(1); return subdivided_wheel(as_int(0)); }
    if (family == "random_connected") {
        need(2);
        return random_connected(as_int(0), std::stod(params.at(1)), seed);
    }
    throw gdim::GraphError("unknown family '" + family + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph metric dimension / domination toolkit"};
    app.require_subcommand(1);

    bool json = false;
    std::optional<std::uint64_t> budget_ms;
    app.add_flag("--json", json, "emit single-line JSON reports");
    app.add_option("--budget", budget_ms, "solver budget in milliseconds (deterministic)");

    std::string family, out_file, in_file;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
    std::string out_format = "edges";

    auto* cmd_gen = app.add_subcommand("gen", "generate a named graph family");
    cmd_gen->add_option("family", family)->required();
    cmd_gen->add_option("params", params, "family parameters");
    cmd_gen->add_option("--seed", seed, "PRNG seed for random_connected");
    cmd_gen->add_option("-o,--output", out_file, "output file")->required();
    cmd_gen->add_option("--format", out_format, "edges | json")
        ->check(CLI::IsMember({"edges", "json"}));

    auto* cmd_dim = app.add_subcommand("dim", "exact metric dimension");
    auto* cmd_dom = app.add_subcommand("dom", "exact domination number");
    auto* cmd_construct =
        app.add_subcommand("construct", "resolving set from a normalized dominating set");
    bool exact = false;
    auto* cmd_bounds = app.add_subcommand("bounds", "bound catalog");
    cmd_bounds->add_flag("--exact", exact, "also compute exact beta and gamma");
    auto* cmd_classify = app.add_subcommand("classify", "equality-case classification");
    for (auto* c : {cmd_dim, cmd_dom, cmd_construct, cmd_bounds, cmd_classify})
        c->add_option("file", in_file, "graph file (edge list or adjacency JSON)")->required();

    gdim::SweepConfig sweep;
    auto* cmd_verify = app.add_subcommand("verify", "theorem verification sweep");
    cmd_verify->add_option("--count", sweep.random_count, "random graphs to sample");
    cmd_verify->add_option("--min-n", sweep.min_n, "minimum random order");
    cmd_verify->add_option("--max-n", sweep.max_n, "maximum random order");
    cmd_verify->add_option("--p", sweep.p, "edge probability");
    cmd_verify->add_option("--seed", sweep.seed, "sweep seed");
    cmd_verify->add_option("--exhaustive-upto", sweep.exhaustive_upto,
                           "enumerate all connected labeled graphs up to this order");

    CLI11_PARSE(app, argc, argv);
    gdim::Budget budget = to_budget(budget_ms);

    try {
        if (cmd_gen->parsed()) {
            gdim::Graph g = make_family(family, params, seed);
            gdim::write_graph_file(out_file, g, out_format == "json");
            if (!g.is_connected())
                std::cerr << "warning: generated graph is disconnected\n";
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            auto result = gdim::run_verification_sweep(sweep, &std::cout);
            return result.total_violations() == 0 ? kExitOk : kExitAnomaly;
        }

        gdim::Graph g = gdim::read_graph_file(in_file);
        gdim::RunReport report = gdim::make_run_report(in_file, g);

        if (cmd_dim->parsed()) {
            auto r = gdim::metric_dimension(g, budget);
            report.beta = r.beta;
            report.basis = r.basis;
            if (r.status == gdim::SolveStatus::Timeout) {
                report.status = "Timeout";
                report.message = "budget exhausted; beta is an upper bound";
            }
        } else if (cmd_dom->parsed()) {
            auto r = gdim::domination_number(g, budget);
            report.gamma = r.gamma;
            report.dominating_set = r.dominating_set.to_vector();
            if (r.status == gdim::SolveStatus::Timeout) {
                report.status = "Timeout";
                report.message = "budget exhausted; gamma is an upper bound";
            }
        } else if (cmd_construct->parsed()) {
            auto r = gdim::resolving_from_dominating(g, budget);
            if (r.status == gdim::SolveStatus::Timeout) {
                report.status = "Timeout";
                report.message = "budget exhausted in the domination solver";
            } else {
                report.gamma = r.dominating_set.count();
                report.dominating_set = r.dominating_set.to_vector();
                report.resolving_set = r.resolving_set.to_vector();
                std::vector<std::string> trace;
                for (const auto& s : r.trace.steps) trace.push_back(gdim::describe_swap(s));
                report.trace = trace;
            }
        } else if (cmd_bounds->parsed()) {
            auto b = gdim::bound_report(g, exact, budget);
            if (b.beta_timeout || b.gamma_timeout) report.status = "Timeout";
            report.beta = b.beta_exact;
            report.gamma = b.gamma_exact;
            report.bounds = std::move(b);
        } else if (cmd_classify->parsed()) {
            auto c = gdim::classify_equality(g, budget);
            if (c.status == gdim::SolveStatus::Timeout) {
                report.status = "Timeout";
                report.message = "budget exhausted";
            } else {
                report.beta = c.beta;
                report.gamma = c.gamma;
            }
            report.classification = c;
        }

        std::cout << gdim::emit_report(report, json);
        if (json) std::cout << '\n';
        return report.status == "Timeout" ? kExitBudget : kExitOk;
    } catch (const gdim::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const gdim::AnomalyError& e) {
        std::cerr << "anomaly: " << e.what() << "\n";
        return kExitAnomaly;
    } catch (const gdim::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
