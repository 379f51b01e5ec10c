#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "gdim/bounds.hpp"
#include "gdim/constructive.hpp"
#include "gdim/domination.hpp"
#include "gdim/generators.hpp"
#include "gdim/graph.hpp"
#include "gdim/metric.hpp"

namespace gdim {

// Enumerates every connected labeled graph on 1..max_n vertices by edge-subset
// bitmask, in a fixed deterministic order.
template <class F>
void for_each_connected_labeled_graph(int max_n, F&& visit) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> all_pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
        std::uint64_t total = std::uint64_t{1} << all_pairs.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t i = 0; i < all_pairs.size(); ++i)
                if (mask & (std::uint64_t{1} << i)) edges.push_back(all_pairs[i]);
            Graph g = Graph::build(n, edges);
            if (g.is_connected()) visit(g);
        }
    }
}

// Replays a normalization trace backward to its starting set, then forward,
// checking cardinality, domination, and the per-step progress measures.
inline bool verify_trace(const Graph& g, const NormalizationTrace& trace,
                         std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    VertexSet set = trace.final_set;
    for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
        if (!set.contains(it->inserted) || set.contains(it->removed))
            return fail("trace does not replay backward");
        set.remove(it->inserted);
        set.add(it->removed);
    }
    int card = set.count();
    if (!is_dominating_set(g, set).dominating) return fail("initial set is not dominating");
    for (const auto& step : trace.steps) {
        int pre = step.reason == SwapReason::FalseTwin
                      ? detail::false_twin_pairs_inside(g, set)
                      : detail::single_vertices_inside(g, set);
        set.remove(step.removed);
        set.add(step.inserted);
        if (set.count() != card) return fail("cardinality changed during a swap");
        if (!is_dominating_set(g, set).dominating) return fail("intermediate set not dominating");
        int post = step.reason == SwapReason::FalseTwin
                       ? detail::false_twin_pairs_inside(g, set)
                       : detail::single_vertices_inside(g, set);
        // Twin swaps strictly reduce the pair count; single-vertex swaps may
        // only preserve the single count (the inserted vertex can absorb
        // another member's last private neighbor), so require non-increase.
        if (step.reason == SwapReason::FalseTwin && post >= pre)
            return fail("twin-pair count did not strictly decrease");
        if (step.reason == SwapReason::SingleVertex && post > pre)
            return fail("single-vertex count increased");
    }
    if (set != trace.final_set) return fail("trace does not replay to the final set");
    if (detail::false_twin_pairs_inside(g, set) != 0) return fail("final set has a twin pair");
    if (g.order() >= 2 && detail::single_vertices_inside(g, set) != 0)
        return fail("final set has a single vertex");
    return true;
}

struct GraphCheckOutcome {
    bool bound_ok = true;          // beta <= n - gamma
    bool classification_ok = true; // equality iff complete or complete bipartite
    bool pipeline_ok = true;       // constructive normalization invariants
    bool bounds_ok = true;         // bound catalog soundness against exact values
    std::vector<std::string> failures;

    bool all_ok() const { return bound_ok && classification_ok && pipeline_ok && bounds_ok; }
};

inline GraphCheckOutcome check_graph_theorems(const Graph& g) {
    GraphCheckOutcome out;
    int n = g.order();
    int beta = metric_dimension(g).beta;
    int gamma = domination_number(g).gamma;

    if (beta > n - gamma) {
        out.bound_ok = false;
        out.failures.push_back("beta > n - gamma");
    }

    try {
        classify_equality(g); // throws on a structural/numeric mismatch
    } catch (const AnomalyError& e) {
        out.classification_ok = false;
        out.failures.push_back(e.what());
    }

    try {
        auto cons = resolving_from_dominating(g);
        std::string why;
        if (cons.resolving_set.count() != n - gamma) {
            out.pipeline_ok = false;
            out.failures.push_back("|W| != n - gamma");
        } else if (!is_resolving_set(g, cons.resolving_set.to_vector()).resolving) {
            out.pipeline_ok = false;
            out.failures.push_back("pipeline W is not resolving");
        } else if (!verify_trace(g, cons.trace, &why)) {
            out.pipeline_ok = false;
            out.failures.push_back("trace: " + why);
        }
    } catch (const AnomalyError& e) {
        out.pipeline_ok = false;
        out.failures.push_back(e.what());
    }

    auto report = bound_report(g);
    for (const auto& e : report.beta_upper)
        if (e.applicable && e.value < beta) {
            out.bounds_ok = false;
            out.failures.push_back("upper bound " + e.name + " below beta");
        }
    for (const auto& e : report.gamma_lower)
        if (e.applicable && e.value > gamma) {
            out.bounds_ok = false;
            out.failures.push_back("lower bound " + e.name + " above gamma");
        }
    return out;
}

struct SweepConfig {
    int exhaustive_upto = 6;
    int random_count = 1000;
    int min_n = 7;
    int max_n = 18;
    double p = 0.35;
    std::uint64_t seed = 1;
};

struct SweepResult {
    std::uint64_t graphs_checked = 0;
    std::uint64_t bound_violations = 0;
    std::uint64_t classification_mismatches = 0;
    std::uint64_t pipeline_failures = 0;
    std::uint64_t bounds_violations = 0;
    std::vector<std::string> messages; // first few violations, for diagnostics

    std::uint64_t total_violations() const {
        return bound_violations + classification_mismatches + pipeline_failures +
               bounds_violations;
    }
};

// Exhaustive small-graph sweep plus a seeded random sweep; byte-identical
// output for a fixed configuration.
inline SweepResult run_verification_sweep(const SweepConfig& cfg, std::ostream* log = nullptr) {
    SweepResult result;
    auto record = [&](const Graph& g, const std::string& id) {
        auto outcome = check_graph_theorems(g);
        ++result.graphs_checked;
        if (!outcome.bound_ok) ++result.bound_violations;
        if (!outcome.classification_ok) ++result.classification_mismatches;
        if (!outcome.pipeline_ok) ++result.pipeline_failures;
        if (!outcome.bounds_ok) ++result.bounds_violations;
        if (!outcome.all_ok() && result.messages.size() < 20)
            for (const auto& f : outcome.failures) result.messages.push_back(id + ": " + f);
    };

    if (cfg.exhaustive_upto >= 1) {
        std::uint64_t index = 0;
        for_each_connected_labeled_graph(cfg.exhaustive_upto, [&](const Graph& g) {
            record(g, "exhaustive#" + std::to_string(index++));
        });
        if (log)
            *log << "exhaustive sweep: " << index << " connected graphs on <= "
                 << cfg.exhaustive_upto << " vertices\n";
    }

    std::mt19937_64 master(cfg.seed);
    for (int i = 0; i < cfg.random_count; ++i) {
        int span = cfg.max_n - cfg.min_n + 1;
        int n = cfg.min_n + static_cast<int>(master() % static_cast<std::uint64_t>(span));
        std::uint64_t gseed = master();
        Graph g = gen::random_connected(n, cfg.p, gseed);
        record(g, "random#" + std::to_string(i));
    }
    if (log && cfg.random_count > 0)
        *log << "random sweep: " << cfg.random_count << " connected graphs, n in ["
             << cfg.min_n << "," << cfg.max_n << "], p=" << cfg.p << ", seed=" << cfg.seed
             << "\n";
    if (log) {
        *log << "graphs checked: " << result.graphs_checked << "\n"
             << "violations: bound=" << result.bound_violations
             << " classification=" << result.classification_mismatches
             << " pipeline=" << result.pipeline_failures
             << " bounds=" << result.bounds_violations << "\n";
        for (const auto& m : result.messages) *log << "  " << m << "\n";
    }
    return result;
}

} // namespace gdim
