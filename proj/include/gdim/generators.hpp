#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "gdim/common.hpp"
#include "gdim/graph.hpp"

namespace gdim {
namespace gen {

inline Graph complete(int n) {
    if (n < 1) throw GraphError("complete: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

// Sides are the index ranges [0,s) and [s,s+t).
inline Graph complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) throw GraphError("complete_bipartite: sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s; ++u)
        for (int v = s; v < s + t; ++v) edges.emplace_back(u, v);
    return Graph::build(s + t, edges);
}

inline Graph path(int n) {
    if (n < 1) throw GraphError("path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

inline Graph cycle(int n) {
    if (n < 3) throw GraphError("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, edges);
}

// K_{1,t} with the center at index 0.
inline Graph star(int t) {
    if (t < 1) throw GraphError("star: t must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= t; ++v) edges.emplace_back(0, v);
    return Graph::build(t + 1, edges);
}

// Vertices are the k-subsets of {1..n} in lexicographic order;
// two vertices are adjacent iff the subsets are disjoint.
inline Graph kneser(int n, int k) {
    if (k < 1 || n < 2 * k) throw GraphError("kneser: requires n >= 2k >= 2");
    std::vector<std::uint64_t> subsets;
    std::vector<int> cur;
    // lexicographic k-subset enumeration
    auto emit = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            std::uint64_t mask = 0;
            for (int e : cur) mask |= std::uint64_t{1} << e;
            subsets.push_back(mask);
            return;
        }
        for (int e = start; e < n; ++e) {
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    emit(emit, 0);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j)
            if ((subsets[i] & subsets[j]) == 0)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::build(static_cast<int>(subsets.size()), edges);
}

// Wheel on k rim vertices with every spoke subdivided into a path of length
// three. Order 3k+1. Numbering: hub 0; spoke i in [0,k) has internal vertices
// a_i = 1+i and b_i = 1+k+i and rim vertex c_i = 1+2k+i; edges hub-a_i,
// a_i-b_i, b_i-c_i plus the rim cycle c_0..c_{k-1}.
inline Graph subdivided_wheel(int k) {
    if (k < 3) throw GraphError("subdivided_wheel: k must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        int a = 1 + i, b = 1 + k + i, c = 1 + 2 * k + i;
        edges.emplace_back(0, a);
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
    }
    for (int i = 0; i < k; ++i)
        edges.emplace_back(1 + 2 * k + i, 1 + 2 * k + (i + 1) % k);
    return Graph::build(3 * k + 1, edges);
}

// G(n,p) resampled until connected (cap 10000 attempts). Uses raw mt19937_64
// draws so identical (n,p,seed) replays bit-identically on any platform.
inline Graph random_connected(int n, double p, std::uint64_t seed) {
    if (n < 1) throw GraphError("random_connected: n must be >= 1");
    if (!(p > 0.0) || p > 1.0) throw GraphError("random_connected: p must be in (0,1]");
    std::mt19937_64 rng(seed);
    auto coin = [&] { return (rng() >> 11) * (1.0 / 9007199254740992.0) < p; };
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin()) edges.emplace_back(u, v);
        Graph g = Graph::build(n, edges);
        if (g.is_connected()) return g;
    }
    throw GraphError("random_connected: no connected sample in 10000 attempts; increase p");
}

} // namespace gen
} // namespace gdim
