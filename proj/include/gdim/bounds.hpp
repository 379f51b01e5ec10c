#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "gdim/common.hpp"
#include "gdim/domination.hpp"
#include "gdim/graph.hpp"
#include "gdim/metric.hpp"
#include "gdim/spectral.hpp"

namespace gdim {

struct BoundEntry {
    std::string name;
    bool applicable = false;
    long long value = 0;              // meaningful only when applicable
    std::optional<double> real_value; // un-rounded form, spectral bounds only
    std::string condition;
};

// ceil with a small slack so numerical noise in an eigenvalue cannot
// round an exact quotient upward
inline long long ceil_with_slack(double x) { return static_cast<long long>(std::ceil(x - 1e-6)); }

// Girth gates: acyclic graphs count as infinite girth and pass every gate.
inline bool girth_at_least(const Graph& g, int threshold) {
    auto girth = g.girth();
    return !girth || *girth >= threshold;
}

// beta <= n - diam(G)
inline BoundEntry bound_diameter(const Graph& g) {
    return {"n-diam", true, g.order() - g.diameter(), std::nullopt, "always"};
}

// beta <= n - gamma(G)
inline BoundEntry bound_domination(const Graph& g, int gamma) {
    return {"n-gamma", true, g.order() - static_cast<long long>(gamma), std::nullopt, "always"};
}

// Lower bounds on the domination number, each gated by its own condition.
inline std::vector<BoundEntry> gamma_lower_bounds(const Graph& g) {
    int n = g.order();
    int delta = g.min_degree();
    int max_deg = g.max_degree();
    auto degrees = g.degree_sequence();

    std::vector<BoundEntry> out;
    out.push_back({"gamma>=delta", girth_at_least(g, 5), delta, std::nullopt, "girth >= 5"});
    out.push_back({"gamma>=2(delta-1)", girth_at_least(g, 6), 2LL * (delta - 1), std::nullopt,
                   "girth >= 6"});
    out.push_back({"gamma>=ceil(n/(1+Delta))", true, (n + max_deg) / (1 + max_deg), std::nullopt,
                   "always"});

    long long k = 0, partial = 0;
    for (int i = 0; i < n; ++i) {
        ++k;
        partial += degrees[i];
        if (k + partial >= n) break;
    }
    out.push_back({"gamma>=degseq", true, k, std::nullopt, "always"});
    out.push_back({"gamma>=Delta", delta >= 2 && girth_at_least(g, 7), max_deg, std::nullopt,
                   "delta >= 2 and girth >= 7"});

    BoundEntry spectral{"gamma>=n/mu", n >= 2, 0, std::nullopt, "order >= 2"};
    if (n >= 2) {
        double mu = laplacian_max_eigenvalue(g);
        spectral.real_value = n / mu;
        spectral.value = ceil_with_slack(n / mu);
    }
    out.push_back(spectral);
    return out;
}

// Upper bounds on the metric dimension derived from the gamma lower bounds.
inline std::vector<BoundEntry> corollary_bounds(const Graph& g) {
    int n = g.order();
    int delta = g.min_degree();
    int max_deg = g.max_degree();
    auto gamma_bounds = gamma_lower_bounds(g);

    std::vector<BoundEntry> out;
    out.push_back({"n-delta", gamma_bounds[0].applicable, n - static_cast<long long>(delta),
                   std::nullopt, "girth >= 5"});
    out.push_back({"n-2delta+2", gamma_bounds[1].applicable, n - 2LL * delta + 2, std::nullopt,
                   "girth >= 6"});
    out.push_back({"n-ceil(n/(1+Delta))", true, n - gamma_bounds[2].value, std::nullopt,
                   "always"});
    out.push_back({"n-degseq", true, n - gamma_bounds[3].value, std::nullopt, "always"});

    BoundEntry spectral{"n-n/mu", gamma_bounds[5].applicable, 0, std::nullopt, "order >= 2"};
    if (spectral.applicable) {
        spectral.real_value = n - *gamma_bounds[5].real_value;
        spectral.value = n - gamma_bounds[5].value;
    }
    out.push_back(spectral);
    out.push_back({"n-Delta", gamma_bounds[4].applicable, n - static_cast<long long>(max_deg),
                   std::nullopt, "delta >= 2 and girth >= 7"});
    return out;
}

struct BoundReport {
    std::vector<BoundEntry> beta_upper;  // diameter, domination, corollary items
    std::vector<BoundEntry> gamma_lower; // lemma items
    std::optional<int> beta_exact;
    std::optional<int> gamma_exact;
    bool beta_timeout = false;
    bool gamma_timeout = false;
    std::string tightest; // name of the minimum applicable upper bound
};

inline BoundReport bound_report(const Graph& g, bool compute_exact = false, Budget budget = {}) {
    g.all_pairs_distances(); // reject disconnected input up front
    BoundReport report;
    report.beta_upper.push_back(bound_diameter(g));

    if (compute_exact) {
        auto gamma = domination_number(g, budget);
        if (gamma.status == SolveStatus::Exact) {
            report.gamma_exact = gamma.gamma;
            report.beta_upper.push_back(bound_domination(g, gamma.gamma));
        } else {
            report.gamma_timeout = true;
        }
        auto beta = metric_dimension(g, budget);
        if (beta.status == SolveStatus::Exact)
            report.beta_exact = beta.beta;
        else
            report.beta_timeout = true;
    }

    for (auto& e : corollary_bounds(g)) report.beta_upper.push_back(e);
    report.gamma_lower = gamma_lower_bounds(g);

    long long best = -1;
    for (const auto& e : report.beta_upper)
        if (e.applicable && (best < 0 || e.value < best)) {
            best = e.value;
            report.tightest = e.name;
        }
    return report;
}

} // namespace gdim
