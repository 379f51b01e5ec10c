#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "gdim/bounds.hpp"
#include "gdim/generators.hpp"

using namespace gdim;

TEST_CASE("diameter bound") {
    CHECK(bound_diameter(gen::complete(6)).value == 5);
    CHECK(bound_diameter(gen::path(6)).value == 1);
    CHECK(bound_diameter(gen::subdivided_wheel(6)).value >= 13);
}

TEST_CASE("domination bound") {
    Graph sw = gen::subdivided_wheel(6);
    CHECK(bound_domination(sw, domination_number(sw).gamma).value == 12);
    CHECK(bound_domination(gen::complete_bipartite(3, 3), 2).value == 4);
    Graph petersen = gen::kneser(5, 2);
    CHECK(bound_domination(petersen, domination_number(petersen).gamma).value == 7);
}

TEST_CASE("gamma lower bounds on KG(7,3)") {
    auto bounds = gamma_lower_bounds(gen::kneser(7, 3));
    REQUIRE(bounds.size() == 6);
    CHECK(bounds[0].applicable); // girth 6 >= 5
    CHECK(bounds[0].value == 4);
    CHECK(bounds[1].applicable);
    CHECK(bounds[1].value == 6);
    CHECK(bounds[2].value == 7); // ceil(35/5)
    CHECK(bounds[3].value == 7); // degree-sequence bound
    CHECK_FALSE(bounds[4].applicable); // girth 6 < 7
    CHECK(bounds[5].value == 5); // ceil(35/7)
}

TEST_CASE("gamma lower bounds, gating") {
    auto c9 = gamma_lower_bounds(gen::cycle(9));
    CHECK(c9[2].value == 3);
    CHECK(domination_number(gen::cycle(9)).gamma == 3);

    auto k4 = gamma_lower_bounds(gen::complete(4));
    CHECK_FALSE(k4[0].applicable);
    CHECK_FALSE(k4[1].applicable);
    CHECK_FALSE(k4[4].applicable);
    CHECK(k4[2].value == 1);
    CHECK(k4[3].value == 1);
    CHECK(k4[5].value == 1);

    // acyclic graphs pass every girth gate
    auto p5 = gamma_lower_bounds(gen::path(5));
    CHECK(p5[0].applicable);
    CHECK(p5[1].applicable);
    CHECK_FALSE(p5[4].applicable); // delta = 1 fails the degree gate
}

TEST_CASE("corollary bounds on KG(7,3)") {
    auto bounds = corollary_bounds(gen::kneser(7, 3));
    REQUIRE(bounds.size() == 6);
    CHECK(bounds[0].value == 31);
    CHECK(bounds[1].value == 29);
    CHECK(bounds[2].value == 28);
    CHECK(bounds[3].value == 28);
    CHECK(bounds[4].value == 30);
    REQUIRE(bounds[4].real_value.has_value());
    CHECK(*bounds[4].real_value == doctest::Approx(30.0).epsilon(1e-8));
    CHECK_FALSE(bounds[5].applicable);
}

TEST_CASE("corollary bounds on C_7 and K_5") {
    auto c7 = corollary_bounds(gen::cycle(7)); // girth 7, delta = Delta = 2
    CHECK(c7[0].value == 5);
    CHECK(c7[1].value == 5);
    CHECK(c7[5].applicable);
    CHECK(c7[5].value == 5);
    CHECK(metric_dimension(gen::cycle(7)).beta == 2);

    auto k5 = corollary_bounds(gen::complete(5));
    CHECK_FALSE(k5[0].applicable);
    CHECK_FALSE(k5[1].applicable);
    CHECK(k5[2].value == 4);
    CHECK(k5[3].value == 4);
    CHECK(k5[4].value == 4);
    CHECK_FALSE(k5[5].applicable);
}

TEST_CASE("corollary and lemma items agree where both apply") {
    for (const Graph& g : {gen::cycle(7), gen::kneser(5, 2), gen::kneser(7, 3), gen::path(9),
                           gen::complete(6), gen::subdivided_wheel(5)}) {
        auto lower = gamma_lower_bounds(g);
        auto upper = corollary_bounds(g);
        int n = g.order();
        // item order: corollary (i..iv) <-> lemma (i..iv), corollary (v) <->
        // spectral lemma, corollary (vi) <-> lemma (v)
        std::pair<int, int> pairing[] = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 5}, {5, 4}};
        for (auto [ui, li] : pairing) {
            CHECK(upper[ui].applicable == lower[li].applicable);
            if (upper[ui].applicable) CHECK(upper[ui].value == n - lower[li].value);
        }
    }
}

TEST_CASE("degree-sequence and max-degree counting bounds coincide on regular graphs") {
    for (const Graph& g :
         {gen::cycle(8), gen::complete(6), gen::kneser(5, 2), gen::kneser(7, 3)}) {
        auto lower = gamma_lower_bounds(g);
        CHECK(lower[2].value == lower[3].value);
    }
}

TEST_CASE("bound_report") {
    auto k23 = bound_report(gen::complete_bipartite(2, 3), true);
    REQUIRE(k23.beta_exact.has_value());
    CHECK(*k23.beta_exact == 3);
    // tightest value is 3; n-diam and n-gamma tie, first catalog entry wins
    long long tightest_value = -1;
    for (const auto& e : k23.beta_upper)
        if (e.name == k23.tightest) tightest_value = e.value;
    CHECK(tightest_value == 3);
    for (const auto& e : k23.beta_upper)
        if (e.applicable) CHECK(e.value >= 3);

    auto sw = bound_report(gen::subdivided_wheel(6), true);
    long long dom_bound = 0, diam_bound = 0;
    for (const auto& e : sw.beta_upper) {
        if (e.name == "n-gamma") dom_bound = e.value;
        if (e.name == "n-diam") diam_bound = e.value;
    }
    CHECK(dom_bound == 12);
    CHECK(diam_bound >= 13);
    CHECK(dom_bound < diam_bound);

    auto p2 = bound_report(gen::path(2), true);
    CHECK(*p2.beta_exact == 1);
    long long tightest = 100;
    for (const auto& e : p2.beta_upper)
        if (e.applicable) {
            CHECK(e.value >= 1);
            tightest = std::min(tightest, e.value);
        }
    CHECK(tightest == 1);
}

TEST_CASE("bound soundness on random graphs") {
    for (int i = 0; i < 150; ++i) {
        Graph g = gen::random_connected(2 + i % 12, 0.4, 616 + i);
        auto report = bound_report(g, true);
        REQUIRE(report.beta_exact.has_value());
        REQUIRE(report.gamma_exact.has_value());
        for (const auto& e : report.beta_upper)
            if (e.applicable) CHECK(e.value >= *report.beta_exact);
        for (const auto& e : report.gamma_lower)
            if (e.applicable) CHECK(e.value <= *report.gamma_exact);
    }
}
