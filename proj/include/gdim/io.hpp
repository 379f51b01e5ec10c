#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gdim/common.hpp"
#include "gdim/graph.hpp"

namespace gdim {

// Edge-list format: '#' comment lines, then "n m", then exactly m lines "u v"
// with 0-based decimal indices.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            if (!line.empty() && line[0] == '#') continue;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    };
    std::string header;
    if (!next_data_line(header)) throw ParseError("edge list: missing header line");
    std::istringstream hs(header);
    long long n, m;
    if (!(hs >> n >> m)) throw ParseError("edge list: header must be 'n m'");
    std::string trailing;
    if (hs >> trailing) throw ParseError("edge list: trailing token in header: " + trailing);
    if (n <= 0 || m < 0) throw ParseError("edge list: invalid counts in header");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string row;
        if (!next_data_line(row))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        std::istringstream rs(row);
        long long u, v;
        if (!(rs >> u >> v)) throw ParseError("edge list: bad edge line: " + row);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    try {
        return Graph::build(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    out << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

// Adjacency JSON: {"n": int, "edges": [[u,v], ...]}
inline Graph parse_adjacency_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("adjacency JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("adjacency JSON: expected object with fields 'n' and 'edges'");
    if (!j["n"].is_number_integer()) throw ParseError("adjacency JSON: 'n' must be an integer");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("adjacency JSON: each edge must be a 2-element integer array");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::build(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(e.what());
    }
}

inline void write_adjacency_json(std::ostream& out, const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges.push_back({u, v});
    out << nlohmann::json{{"n", g.order()}, {"edges", edges}} << '\n';
}

// Sniffs the format: a leading '{' means adjacency JSON, otherwise edge list.
inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_adjacency_json(text);
    std::istringstream is(text);
    return parse_edge_list(is);
}

inline void write_graph_file(const std::string& path, const Graph& g, bool json = false) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write file: " + path);
    if (json)
        write_adjacency_json(out, g);
    else
        write_edge_list(out, g);
}

} // namespace gdim
