#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gdim/common.hpp"
#include "gdim/graph.hpp"
#include "gdim/vertex_set.hpp"

namespace gdim {

// r(v|W): distances from v to the vertices of W, in W's order.
inline std::vector<int> metric_representation(const Graph& g, int v, const std::vector<int>& w) {
    if (w.empty()) throw GraphError("metric representation needs a non-empty landmark set");
    std::vector<int> rep;
    rep.reserve(w.size());
    for (int wi : w) rep.push_back(g.distance(v, wi));
    return rep;
}

struct ResolveCheck {
    bool resolving = false;
    std::optional<std::pair<int, int>> witness; // unresolved pair when not resolving
};

// W resolves G iff all vertices outside W have pairwise distinct representations;
// vertices inside W are identified by their own zero coordinate.
inline ResolveCheck is_resolving_set(const Graph& g, const std::vector<int>& w) {
    int n = g.order();
    VertexSet in_w(n);
    for (int v : w) in_w.add(v);
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
        if (!in_w.contains(v)) outside.push_back(v);
    if (outside.size() < 2) return {true, std::nullopt};
    if (w.empty()) return {false, std::make_pair(outside[0], outside[1])};

    std::vector<std::pair<std::vector<int>, int>> reps;
    reps.reserve(outside.size());
    for (int v : outside) reps.emplace_back(metric_representation(g, v, w), v);
    std::sort(reps.begin(), reps.end());
    for (std::size_t i = 1; i < reps.size(); ++i)
        if (reps[i].first == reps[i - 1].first) {
            int a = reps[i - 1].second, b = reps[i].second;
            return {false, std::make_pair(std::min(a, b), std::max(a, b))};
        }
    return {true, std::nullopt};
}

struct MetricBasisResult {
    SolveStatus status = SolveStatus::Exact;
    int beta = 0;                // on Timeout: best known upper bound
    std::vector<int> basis;      // on Timeout: a resolving set of that size
    std::uint64_t subsets_examined = 0;
};

namespace detail {

// Nontrivial twin classes of both kinds. Vertices inside one class are
// indistinguishable by any landmark outside the class, so every resolving
// set must contain all but at most one member of each class.
inline std::vector<std::vector<int>> twin_constraint_classes(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::map<std::vector<int>, std::vector<int>> open, closed;
    for (int v = 0; v < g.order(); ++v) {
        open[g.neighbors(v)].push_back(v);
        std::vector<int> cl = g.neighbors(v);
        cl.insert(std::lower_bound(cl.begin(), cl.end(), v), v);
        closed[cl].push_back(v);
    }
    for (auto* m : {&open, &closed})
        for (auto& [_, members] : *m)
            if (members.size() >= 2) out.push_back(members);
    return out;
}

// Greedy resolving set: repeatedly add the vertex that splits the most
// signature groups, lowest index on ties. Used as the Timeout fallback.
inline std::vector<int> greedy_resolving_set(const Graph& g) {
    int n = g.order();
    std::vector<int> w;
    while (true) {
        if (is_resolving_set(g, w).resolving) return w;
        int best_v = -1;
        std::size_t best_groups = 0;
        for (int v = 0; v < n; ++v) {
            if (std::find(w.begin(), w.end(), v) != w.end()) continue;
            std::vector<int> trial = w;
            trial.push_back(v);
            std::map<std::vector<int>, int> groups;
            for (int u = 0; u < n; ++u) {
                if (std::find(trial.begin(), trial.end(), u) != trial.end()) continue;
                ++groups[metric_representation(g, u, trial)];
            }
            if (best_v < 0 || groups.size() > best_groups) {
                best_v = v;
                best_groups = groups.size();
            }
        }
        w.push_back(best_v);
        std::sort(w.begin(), w.end());
    }
}

} // namespace detail

// Exact metric dimension with the canonical (lexicographically smallest)
// basis. Sizes ascending, subsets in lex order, twin-class pruning.
inline MetricBasisResult metric_dimension(const Graph& g, Budget budget = {}) {
    int n = g.order();
    if (!g.is_connected()) g.all_pairs_distances(); // throws with unreachable pair
    MetricBasisResult result;
    if (n == 1) return result;

    auto classes = detail::twin_constraint_classes(g);
    std::uint64_t examined = 0;
    std::vector<int> chosen_in_class(classes.size(), 0);
    std::vector<int> candidate;

    // every resolving set needs >= |C|-1 vertices from each constraint class
    auto feasible = [&](int next_start, int remaining) {
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const auto& cls = classes[c];
            int avail = static_cast<int>(cls.end() -
                                         std::lower_bound(cls.begin(), cls.end(), next_start));
            int need = static_cast<int>(cls.size()) - 1 - chosen_in_class[c];
            if (need > std::min(avail, remaining)) return false;
        }
        return true;
    };

    bool timed_out = false;
    std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
        if (remaining == 0) {
            ++examined;
            if (budget && examined > *budget) {
                timed_out = true;
                return false;
            }
            return is_resolving_set(g, candidate).resolving;
        }
        for (int v = start; v <= n - remaining; ++v) {
            candidate.push_back(v);
            for (std::size_t c = 0; c < classes.size(); ++c)
                if (std::binary_search(classes[c].begin(), classes[c].end(), v))
                    ++chosen_in_class[c];
            bool found = feasible(v + 1, remaining - 1) && rec(v + 1, remaining - 1);
            if (!found) {
                for (std::size_t c = 0; c < classes.size(); ++c)
                    if (std::binary_search(classes[c].begin(), classes[c].end(), v))
                        --chosen_in_class[c];
                candidate.pop_back();
            }
            if (found) return true;
            if (timed_out) return false;
        }
        return false;
    };

    // nontrivial false- and true-twin classes are pairwise disjoint
    int kmin = 0;
    for (const auto& cls : classes) kmin += static_cast<int>(cls.size()) - 1;
    kmin = std::max(kmin, 1);
    for (int k = kmin; k <= n - 1; ++k) {
        candidate.clear();
        std::fill(chosen_in_class.begin(), chosen_in_class.end(), 0);
        if (rec(0, k)) {
            result.beta = k;
            result.basis = candidate;
            result.subsets_examined = examined;
            return result;
        }
        if (timed_out) {
            result.status = SolveStatus::Timeout;
            result.basis = detail::greedy_resolving_set(g);
            result.beta = static_cast<int>(result.basis.size());
            result.subsets_examined = examined;
            return result;
        }
    }
    throw AnomalyError("metric dimension search exhausted all sizes without a basis");
}

} // namespace gdim
