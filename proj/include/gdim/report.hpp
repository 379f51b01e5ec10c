#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdim/bounds.hpp"
#include "gdim/constructive.hpp"
#include "gdim/graph.hpp"
#include "gdim/spectral.hpp"

namespace gdim {

// Self-contained result record for one graph run.
struct RunReport {
    std::string graph_id;
    int n = 0;
    long long m = 0;
    int diam = 0;
    std::optional<int> girth; // nullopt serialized as "acyclic"
    int delta = 0;
    int max_deg = 0;
    std::optional<double> mu_max;
    std::optional<int> beta;
    std::optional<std::vector<int>> basis;
    std::optional<int> gamma;
    std::optional<std::vector<int>> dominating_set;
    std::optional<std::vector<int>> resolving_set;
    std::optional<std::vector<std::string>> trace;
    std::optional<BoundReport> bounds;
    std::optional<Classification> classification;
    std::string status = "Ok"; // Ok | Timeout | Error
    std::string message;
};

inline RunReport make_run_report(std::string graph_id, const Graph& g) {
    RunReport r;
    r.graph_id = std::move(graph_id);
    r.n = g.order();
    r.m = static_cast<long long>(g.edge_count());
    r.diam = g.diameter();
    r.girth = g.girth();
    r.delta = g.min_degree();
    r.max_deg = g.max_degree();
    if (r.n >= 2) r.mu_max = laplacian_max_eigenvalue(g);
    return r;
}

inline std::string classification_name(const Classification& c) {
    switch (c.verdict) {
        case Classification::Verdict::CompleteGraph: return "CompleteGraph";
        case Classification::Verdict::CompleteBipartite: return "CompleteBipartite";
        default: return "StrictInequality";
    }
}

inline std::string describe_swap(const SwapStep& s) {
    return std::to_string(s.removed) + "->" + std::to_string(s.inserted) +
           (s.reason == SwapReason::FalseTwin ? " (false-twin)" : " (single-vertex)");
}

namespace detail {

inline nlohmann::json bounds_json(const BoundReport& b) {
    nlohmann::json j;
    auto entries = [](const std::vector<BoundEntry>& es) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : es) {
            nlohmann::json o{{"name", e.name},
                             {"applicable", e.applicable},
                             {"condition", e.condition}};
            if (e.applicable) o["value"] = e.value;
            if (e.real_value) o["real_value"] = *e.real_value;
            arr.push_back(o);
        }
        return arr;
    };
    j["beta_upper"] = entries(b.beta_upper);
    j["gamma_lower"] = entries(b.gamma_lower);
    if (b.beta_exact) j["beta_exact"] = *b.beta_exact;
    if (b.gamma_exact) j["gamma_exact"] = *b.gamma_exact;
    if (b.beta_timeout) j["beta_status"] = "Timeout";
    if (b.gamma_timeout) j["gamma_status"] = "Timeout";
    j["tightest"] = b.tightest;
    return j;
}

} // namespace detail

inline std::string emit_report(const RunReport& r, bool json) {
    if (json) {
        nlohmann::json j;
        j["graph"] = r.graph_id;
        j["n"] = r.n;
        j["m"] = r.m;
        j["diam"] = r.diam;
        if (r.girth)
            j["girth"] = *r.girth;
        else
            j["girth"] = "acyclic";
        j["delta"] = r.delta;
        j["Delta"] = r.max_deg;
        if (r.mu_max) j["mu_max"] = *r.mu_max;
        if (r.beta) j["beta"] = *r.beta;
        if (r.basis) j["basis"] = *r.basis;
        if (r.gamma) j["gamma"] = *r.gamma;
        if (r.dominating_set) j["dominating_set"] = *r.dominating_set;
        if (r.resolving_set) j["resolving_set"] = *r.resolving_set;
        if (r.trace) j["trace"] = *r.trace;
        if (r.bounds) j["bounds"] = detail::bounds_json(*r.bounds);
        if (r.classification) {
            const auto& c = *r.classification;
            j["classification"] = classification_name(c);
            if (c.verdict == Classification::Verdict::CompleteBipartite) {
                j["s"] = c.s;
                j["t"] = c.t;
            }
        }
        j["status"] = r.status;
        if (!r.message.empty()) j["message"] = r.message;
        return j.dump();
    }

    std::ostringstream out;
    auto join = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    out << "graph: " << r.graph_id << '\n';
    out << "  n=" << r.n << " m=" << r.m << " diam=" << r.diam << " girth=";
    if (r.girth)
        out << *r.girth;
    else
        out << "acyclic";
    out << " delta=" << r.delta << " Delta=" << r.max_deg;
    if (r.mu_max) out << " mu_max=" << *r.mu_max;
    out << '\n';
    if (r.beta) {
        out << "  beta=" << *r.beta;
        if (r.basis) out << " basis=" << join(*r.basis);
        out << '\n';
    }
    if (r.gamma) {
        out << "  gamma=" << *r.gamma;
        if (r.dominating_set) out << " dominating_set=" << join(*r.dominating_set);
        out << '\n';
    }
    if (r.resolving_set) out << "  resolving_set=" << join(*r.resolving_set) << '\n';
    if (r.trace) {
        out << "  trace (" << r.trace->size() << " swaps)";
        for (const auto& s : *r.trace) out << " " << s;
        out << '\n';
    }
    if (r.bounds) {
        const auto& b = *r.bounds;
        out << "  upper bounds on beta:\n";
        for (const auto& e : b.beta_upper) {
            out << "    " << e.name << ": ";
            if (e.applicable) {
                out << e.value;
                if (e.real_value) out << " (real " << *e.real_value << ")";
            } else {
                out << "n/a [" << e.condition << "]";
            }
            out << '\n';
        }
        out << "  lower bounds on gamma:\n";
        for (const auto& e : b.gamma_lower) {
            out << "    " << e.name << ": ";
            if (e.applicable) {
                out << e.value;
                if (e.real_value) out << " (real " << *e.real_value << ")";
            } else {
                out << "n/a [" << e.condition << "]";
            }
            out << '\n';
        }
        if (b.beta_exact) out << "  beta_exact=" << *b.beta_exact << '\n';
        if (b.gamma_exact) out << "  gamma_exact=" << *b.gamma_exact << '\n';
        if (!b.tightest.empty()) out << "  tightest=" << b.tightest << '\n';
    }
    if (r.classification) {
        const auto& c = *r.classification;
        out << "  classification=" << classification_name(c);
        if (c.verdict == Classification::Verdict::CompleteGraph)
            out << "(" << c.s << ")";
        else if (c.verdict == Classification::Verdict::CompleteBipartite)
            out << "(" << c.s << "," << c.t << ")";
        out << " beta=" << c.beta << " gamma=" << c.gamma << '\n';
    }
    out << "  status: " << r.status;
    if (!r.message.empty()) out << " (" << r.message << ")";
    out << '\n';
    return out.str();
}

} // namespace gdim
