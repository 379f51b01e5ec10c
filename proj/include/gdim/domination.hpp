#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gdim/common.hpp"
#include "gdim/graph.hpp"
#include "gdim/vertex_set.hpp"

namespace gdim {

struct DominationCheck {
    bool dominating = false;
    std::optional<int> undominated; // a witness vertex when not dominating
};

inline DominationCheck is_dominating_set(const Graph& g, const VertexSet& s) {
    VertexSet covered = s;
    for (int v : s.to_vector()) covered |= g.neighbor_set(v);
    if (covered.covers_universe()) return {true, std::nullopt};
    return {false, covered.complement().first()};
}

struct DominationResult {
    SolveStatus status = SolveStatus::Exact;
    int gamma = 0;           // on Timeout: greedy upper bound
    VertexSet dominating_set; // on Timeout: the greedy set
    std::uint64_t subsets_examined = 0;
};

// Repeatedly pick the vertex covering the most undominated vertices,
// ties to the lowest index.
inline VertexSet greedy_dominating_set(const Graph& g) {
    int n = g.order();
    VertexSet chosen(n), covered(n);
    while (!covered.covers_universe()) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            if (chosen.contains(v)) continue;
            VertexSet gain = g.closed_neighborhood(v) & covered.complement();
            int c = gain.count();
            if (c > best_gain) {
                best_gain = c;
                best = v;
            }
        }
        chosen.add(best);
        covered |= g.closed_neighborhood(best);
    }
    return chosen;
}

// Exact domination number with the canonical (lexicographically smallest)
// minimum dominating set. Size-ascending lex subset enumeration, bounded
// above by the greedy cover.
inline DominationResult domination_number(const Graph& g, Budget budget = {}) {
    int n = g.order();
    if (!g.is_connected()) g.all_pairs_distances(); // throws with unreachable pair
    VertexSet greedy = greedy_dominating_set(g);
    int upper = greedy.count();
    int lower = std::max(1, (n + g.max_degree()) / (1 + g.max_degree()));

    std::vector<VertexSet> closed(n, VertexSet(n));
    for (int v = 0; v < n; ++v) closed[v] = g.closed_neighborhood(v);
    // last_coverer[v]: largest-index vertex whose closed neighborhood covers v
    std::vector<int> last_coverer(n);
    for (int v = 0; v < n; ++v) {
        int last = v;
        for (int w : g.neighbors(v)) last = std::max(last, w);
        last_coverer[v] = last;
    }

    std::uint64_t examined = 0;
    bool timed_out = false;
    std::vector<int> chosen;
    int max_cover = g.max_degree() + 1;

    std::function<bool(int, int, VertexSet&)> rec = [&](int start, int remaining,
                                                        VertexSet& covered) -> bool {
        if (remaining == 0) {
            ++examined;
            if (budget && examined > *budget) {
                timed_out = true;
                return false;
            }
            return covered.covers_universe();
        }
        VertexSet uncovered = covered.complement();
        int u = uncovered.first();
        if (u >= 0) {
            if (uncovered.count() > remaining * max_cover) return false;
            // the first uncovered vertex must still be coverable by a future pick
            if (last_coverer[u] < start) return false;
        }
        for (int v = start; v <= n - remaining; ++v) {
            VertexSet next = covered | closed[v];
            chosen.push_back(v);
            if (rec(v + 1, remaining - 1, next)) return true;
            chosen.pop_back();
            if (timed_out) return false;
        }
        return false;
    };

    for (int k = lower; k <= upper; ++k) {
        chosen.clear();
        VertexSet covered(n);
        if (rec(0, k, covered)) {
            DominationResult r;
            r.gamma = k;
            r.dominating_set = VertexSet::from(n, chosen);
            r.subsets_examined = examined;
            return r;
        }
        if (timed_out) {
            DominationResult r;
            r.status = SolveStatus::Timeout;
            r.gamma = upper;
            r.dominating_set = greedy;
            r.subsets_examined = examined;
            return r;
        }
    }
    // the greedy set itself is dominating, so the loop always terminates above
    DominationResult r;
    r.gamma = upper;
    r.dominating_set = greedy;
    r.subsets_examined = examined;
    return r;
}

// Vertices outside the dominating set whose unique neighbor inside it is u.
inline VertexSet private_neighbors(const Graph& g, const VertexSet& dom, int u) {
    if (!dom.contains(u)) throw GraphError("private_neighbors: vertex not in the dominating set");
    int n = g.order();
    VertexSet result(n);
    for (int x = 0; x < n; ++x) {
        if (dom.contains(x)) continue;
        VertexSet in_dom = g.neighbor_set(x) & dom;
        if (in_dom.count() == 1 && in_dom.contains(u)) result.add(x);
    }
    return result;
}

// u is single in the dominating set iff it has no private neighbor and no
// neighbor inside the set.
inline bool is_single_vertex(const Graph& g, const VertexSet& dom, int u) {
    if (!dom.contains(u)) throw GraphError("is_single_vertex: vertex not in the dominating set");
    if (g.neighbor_set(u).intersects(dom)) return false;
    return private_neighbors(g, dom, u).empty();
}

} // namespace gdim
