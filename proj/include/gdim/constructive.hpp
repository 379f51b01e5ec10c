#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "gdim/common.hpp"
#include "gdim/domination.hpp"
#include "gdim/graph.hpp"
#include "gdim/metric.hpp"
#include "gdim/vertex_set.hpp"

namespace gdim {

enum class SwapReason { FalseTwin, SingleVertex };

struct SwapStep {
    int removed = -1;
    int inserted = -1;
    SwapReason reason = SwapReason::FalseTwin;
};

struct NormalizationTrace {
    std::vector<SwapStep> steps;
    VertexSet final_set;
};

namespace detail {

inline int false_twin_pairs_inside(const Graph& g, const VertexSet& s) {
    auto members = s.to_vector();
    int pairs = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (g.false_twins(members[i], members[j])) ++pairs;
    return pairs;
}

inline int single_vertices_inside(const Graph& g, const VertexSet& s) {
    int count = 0;
    for (int u : s.to_vector())
        if (is_single_vertex(g, s, u)) ++count;
    return count;
}

inline void require_minimum_dominating(const Graph& g, const VertexSet& dom,
                                       bool verify_minimality) {
    auto check = is_dominating_set(g, dom);
    if (!check.dominating)
        throw GraphError("input set is not dominating: vertex " +
                         std::to_string(*check.undominated) + " is undominated");
    if (verify_minimality) {
        auto exact = domination_number(g);
        if (exact.gamma < dom.count())
            throw GraphError("input dominating set is not minimum: found one of size " +
                             std::to_string(exact.gamma));
    }
}

} // namespace detail

// Swap false twins out of a minimum dominating set until none remain.
// Each swap replaces one twin by a neighbor outside the set; the set stays
// dominating at constant cardinality and the twin-pair count strictly drops.
inline NormalizationTrace eliminate_false_twins(const Graph& g, VertexSet dom,
                                                bool verify_minimality = false) {
    detail::require_minimum_dominating(g, dom, verify_minimality);
    int n = g.order();
    NormalizationTrace trace;
    int pairs = detail::false_twin_pairs_inside(g, dom);
    long cap = static_cast<long>(n) * n;
    while (pairs > 0) {
        if (static_cast<long>(trace.steps.size()) >= cap)
            throw AnomalyError("false-twin elimination exceeded the swap cap");
        auto members = dom.to_vector();
        int u = -1, v = -1;
        for (std::size_t i = 0; i < members.size() && u < 0; ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.false_twins(members[i], members[j])) {
                    u = members[i];
                    v = members[j];
                    break;
                }
        int x = -1;
        for (int w : g.neighbors(u))
            if (!dom.contains(w)) {
                x = w;
                break;
            }
        if (x < 0) throw AnomalyError("false twin has no neighbor outside the dominating set");
        dom.remove(u);
        dom.add(x);
        trace.steps.push_back({u, x, SwapReason::FalseTwin});
        auto check = is_dominating_set(g, dom);
        if (!check.dominating)
            throw AnomalyError("false-twin swap broke domination at vertex " +
                               std::to_string(*check.undominated));
        int next_pairs = detail::false_twin_pairs_inside(g, dom);
        if (next_pairs >= pairs)
            throw AnomalyError("false-twin swap did not decrease the twin-pair count");
        pairs = next_pairs;
    }
    trace.final_set = dom;
    return trace;
}

// Swap single vertices out of a twin-free minimum dominating set until every
// member has a private neighbor. A swap of a single vertex for an outside
// neighbor need not reduce the single count (the inserted vertex may absorb
// another member's only private neighbor), so each round prefers the
// lexicographically smallest strictly improving swap and falls back to a
// count-preserving swap into a set not seen before; visited-set tracking plus
// the n^2 cap guarantee termination.
inline NormalizationTrace ensure_private_neighbors(const Graph& g, VertexSet dom,
                                                   bool verify_minimality = false) {
    detail::require_minimum_dominating(g, dom, verify_minimality);
    if (detail::false_twin_pairs_inside(g, dom) > 0)
        throw GraphError("ensure_private_neighbors requires a twin-free dominating set");
    NormalizationTrace trace;
    int n = g.order();
    if (n == 1) { // the lone vertex has neither private neighbor nor swap partner
        trace.final_set = dom;
        return trace;
    }
    int singles = detail::single_vertices_inside(g, dom);
    long cap = static_cast<long>(n) * n;
    std::vector<std::vector<int>> seen{dom.to_vector()};
    while (singles > 0) {
        if (static_cast<long>(trace.steps.size()) >= cap)
            throw AnomalyError("private-neighbor normalization exceeded the swap cap");
        int best_u = -1, best_x = -1, best_singles = -1;
        bool any_outside_neighbor = false;
        for (int u : dom.to_vector()) {
            if (!is_single_vertex(g, dom, u)) continue;
            for (int x : g.neighbors(u)) {
                if (dom.contains(x)) continue;
                any_outside_neighbor = true;
                VertexSet next = dom;
                next.remove(u);
                next.add(x);
                if (!is_dominating_set(g, next).dominating)
                    throw AnomalyError("single-vertex swap broke domination");
                if (detail::false_twin_pairs_inside(g, next) > 0)
                    throw AnomalyError("single-vertex swap introduced a false-twin pair");
                int next_singles = detail::single_vertices_inside(g, next);
                if (next_singles > singles) continue;
                if (next_singles == singles &&
                    std::find(seen.begin(), seen.end(), next.to_vector()) != seen.end())
                    continue;
                if (best_u < 0 || next_singles < best_singles) {
                    best_u = u;
                    best_x = x;
                    best_singles = next_singles;
                }
                if (best_singles < singles) break; // lex-first strict improvement wins
            }
            if (best_singles >= 0 && best_singles < singles) break;
        }
        if (!any_outside_neighbor)
            throw AnomalyError("single vertex has no neighbor outside the dominating set");
        if (best_u < 0)
            throw AnomalyError("no single-vertex swap makes progress");
        dom.remove(best_u);
        dom.add(best_x);
        trace.steps.push_back({best_u, best_x, SwapReason::SingleVertex});
        seen.push_back(dom.to_vector());
        singles = best_singles;
    }
    trace.final_set = dom;
    return trace;
}

struct ConstructiveResult {
    SolveStatus status = SolveStatus::Exact;
    VertexSet dominating_set; // normalized minimum dominating set
    VertexSet resolving_set;  // its complement, verified resolving
    NormalizationTrace trace; // twin swaps followed by single-vertex swaps
};

// Compute a minimum dominating set, normalize it, and return the complement
// as a verified resolving set of size n - gamma.
inline ConstructiveResult resolving_from_dominating(const Graph& g, Budget budget = {},
                                                    bool apply_private_normalization = true) {
    auto dom = domination_number(g, budget);
    ConstructiveResult result;
    if (dom.status == SolveStatus::Timeout) {
        result.status = SolveStatus::Timeout;
        return result;
    }
    auto t1 = eliminate_false_twins(g, dom.dominating_set);
    NormalizationTrace combined = t1;
    if (apply_private_normalization) {
        auto t2 = ensure_private_neighbors(g, t1.final_set);
        combined.steps.insert(combined.steps.end(), t2.steps.begin(), t2.steps.end());
        combined.final_set = t2.final_set;
    }
    result.dominating_set = combined.final_set;
    result.resolving_set = combined.final_set.complement();
    result.trace = std::move(combined);
    auto check = is_resolving_set(g, result.resolving_set.to_vector());
    if (!check.resolving)
        throw AnomalyError("complement of normalized dominating set failed to resolve: pair (" +
                           std::to_string(check.witness->first) + "," +
                           std::to_string(check.witness->second) + ")");
    return result;
}

struct Classification {
    enum class Verdict { CompleteGraph, CompleteBipartite, StrictInequality };
    SolveStatus status = SolveStatus::Exact;
    Verdict verdict = Verdict::StrictInequality;
    int s = 0, t = 0; // CompleteGraph: s = n; CompleteBipartite: side sizes, s <= t
    int beta = 0, gamma = 0;
};

namespace detail {

// Bipartition side sizes via 2-coloring, or nullopt when an odd cycle exists.
inline std::optional<std::pair<int, int>> bipartition_sizes(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    int s = 0, t = 0;
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        ++s;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    (color[w] == 0 ? s : t)++;
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(s, t);
}

} // namespace detail

// Structural detection of the equality case, cross-checked against the
// computed invariants: equality beta = n - gamma must hold exactly for
// complete graphs and complete bipartite graphs with both sides >= 2.
inline Classification classify_equality(const Graph& g, Budget budget = {}) {
    if (!g.is_connected()) g.all_pairs_distances();
    int n = g.order();
    Classification c;

    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) {
        c.verdict = Classification::Verdict::CompleteGraph;
        c.s = n;
    } else if (auto sides = detail::bipartition_sizes(g)) {
        auto [s, t] = *sides;
        if (s >= 2 && t >= 2 &&
            g.edge_count() == static_cast<std::size_t>(s) * static_cast<std::size_t>(t)) {
            c.verdict = Classification::Verdict::CompleteBipartite;
            c.s = std::min(s, t);
            c.t = std::max(s, t);
        }
    }

    auto beta = metric_dimension(g, budget);
    auto gamma = domination_number(g, budget);
    if (beta.status == SolveStatus::Timeout || gamma.status == SolveStatus::Timeout) {
        c.status = SolveStatus::Timeout;
        return c;
    }
    c.beta = beta.beta;
    c.gamma = gamma.gamma;
    bool equality = c.beta == n - c.gamma;
    bool structural = c.verdict != Classification::Verdict::StrictInequality;
    if (equality != structural)
        throw AnomalyError("equality classification mismatch: beta=" + std::to_string(c.beta) +
                           " gamma=" + std::to_string(c.gamma) + " n=" + std::to_string(n));
    return c;
}

} // namespace gdim
