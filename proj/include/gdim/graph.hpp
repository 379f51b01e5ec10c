#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "gdim/common.hpp"
#include "gdim/vertex_set.hpp"

namespace gdim {

// All-pairs shortest-path hop counts. Entry -1 means unreachable.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> flat) : n_(n), d_(std::move(flat)) {}

    int order() const { return n_; }
    int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    int max_entry() const { return *std::max_element(d_.begin(), d_.end()); }

private:
    int n_ = 0;
    std::vector<int> d_;
};

// Partition of V into maximal classes of equal open neighborhoods.
struct TwinPartition {
    std::vector<std::vector<int>> classes;
};

// Immutable simple graph. Distances are cached at construction; all accessors
// are safe for unrestricted concurrent reads.
class Graph {
public:
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n <= 0) throw GraphError("vertex count must be positive");
        Graph g;
        g.n_ = n;
        g.adj_mask_.assign(n, VertexSet(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                 std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v) throw GraphError("self-loop rejected at vertex " + std::to_string(u));
            g.adj_mask_[u].add(v); // duplicates collapse in the bitset
            g.adj_mask_[v].add(u);
        }
        g.adj_.resize(n);
        g.m_ = 0;
        for (int v = 0; v < n; ++v) {
            g.adj_[v] = g.adj_mask_[v].to_vector();
            g.m_ += g.adj_[v].size();
        }
        g.m_ /= 2;
        g.compute_distances();
        return g;
    }

    int order() const { return n_; }
    std::size_t edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const VertexSet& neighbor_set(int v) const { return adj_mask_[v]; }
    bool adjacent(int u, int v) const { return adj_mask_[u].contains(v); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool is_connected() const { return connected_; }

    // Raw cached distance; -1 when unreachable.
    int distance(int u, int v) const { return dist_.at(u, v); }

    const DistanceMatrix& all_pairs_distances() const {
        require_connected();
        return dist_;
    }

    int diameter() const {
        require_connected();
        return dist_.max_entry();
    }

    // Shortest cycle length; nullopt for acyclic graphs.
    // BFS from every root, closing cycles on non-tree edges.
    std::optional<int> girth() const {
        int best = -1;
        std::vector<int> level(n_), parent(n_);
        for (int root = 0; root < n_; ++root) {
            std::fill(level.begin(), level.end(), -1);
            std::fill(parent.begin(), parent.end(), -1);
            std::queue<int> q;
            level[root] = 0;
            q.push(root);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj_[u]) {
                    if (level[w] < 0) {
                        level[w] = level[u] + 1;
                        parent[w] = u;
                        q.push(w);
                    } else if (w != parent[u]) {
                        int cyc = level[u] + level[w] + 1;
                        if (best < 0 || cyc < best) best = cyc;
                    }
                }
            }
        }
        if (best < 0) return std::nullopt;
        return best;
    }

    std::vector<int> degree_sequence() const {
        std::vector<int> d(n_);
        for (int v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    int min_degree() const {
        int d = n_;
        for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    TwinPartition false_twin_partition() const {
        std::map<std::vector<int>, std::vector<int>> by_nbhd;
        for (int v = 0; v < n_; ++v) by_nbhd[adj_[v]].push_back(v);
        TwinPartition p;
        std::vector<std::pair<int, std::vector<int>>> ordered;
        for (auto& [key, members] : by_nbhd) ordered.emplace_back(members.front(), members);
        std::sort(ordered.begin(), ordered.end());
        for (auto& [_, members] : ordered) p.classes.push_back(members);
        return p;
    }

    bool false_twins(int u, int v) const { return u != v && adj_[u] == adj_[v]; }
    bool true_twins(int u, int v) const {
        if (u == v || !adjacent(u, v)) return false;
        VertexSet cu = adj_mask_[u];
        cu.add(u);
        VertexSet cv = adj_mask_[v];
        cv.add(v);
        return cu == cv;
    }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = adj_mask_[v];
        s.add(v);
        return s;
    }

private:
    void compute_distances() {
        std::vector<int> flat(static_cast<std::size_t>(n_) * n_, -1);
        std::vector<int> level(n_);
        for (int s = 0; s < n_; ++s) {
            std::fill(level.begin(), level.end(), -1);
            std::queue<int> q;
            level[s] = 0;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj_[u])
                    if (level[w] < 0) {
                        level[w] = level[u] + 1;
                        q.push(w);
                    }
            }
            for (int v = 0; v < n_; ++v) flat[static_cast<std::size_t>(s) * n_ + v] = level[v];
        }
        dist_ = DistanceMatrix(n_, std::move(flat));
        connected_ = true;
        for (int v = 0; v < n_ && connected_; ++v)
            if (dist_.at(0, v) < 0) connected_ = false;
    }

    void require_connected() const {
        if (connected_) return;
        for (int v = 1; v < n_; ++v)
            if (dist_.at(0, v) < 0)
                throw GraphError("graph is disconnected: no path between vertices 0 and " +
                                 std::to_string(v));
    }

    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_mask_;
    DistanceMatrix dist_;
    bool connected_ = false;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::build(n, edges);
}

} // namespace gdim
