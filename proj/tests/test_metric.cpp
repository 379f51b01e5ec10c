#include <doctest.h>

#include <algorithm>

#include "gdim/generators.hpp"
#include "gdim/metric.hpp"
#include "gdim/verify.hpp"
#include "oracles.hpp"

using namespace gdim;

TEST_CASE("metric representation") {
    Graph c4 = gen::cycle(4);
    CHECK(metric_representation(c4, 2, {0, 1}) == std::vector<int>{2, 1});
    CHECK(metric_representation(c4, 0, {0}) == std::vector<int>{0});
    Graph k4 = gen::complete(4);
    CHECK(metric_representation(k4, 3, {0, 1, 2}) == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(metric_representation(c4, 0, {}), GraphError);
}

TEST_CASE("is_resolving_set") {
    CHECK(is_resolving_set(gen::complete(3), {0, 1}).resolving);

    auto c4 = is_resolving_set(gen::cycle(4), {0});
    CHECK_FALSE(c4.resolving);
    CHECK(c4.witness == std::make_pair(1, 3));

    auto empty = is_resolving_set(gen::cycle(4), {});
    CHECK_FALSE(empty.resolving);
    CHECK(empty.witness.has_value());

    Graph petersen = gen::kneser(5, 2);
    auto basis = metric_dimension(petersen);
    CHECK(basis.beta == 3);
    CHECK(is_resolving_set(petersen, basis.basis).resolving);
}

TEST_CASE("metric dimension on named graphs") {
    CHECK(metric_dimension(gen::complete(5)).beta == 4);

    auto p6 = metric_dimension(gen::path(6));
    CHECK(p6.beta == 1);
    CHECK(p6.basis == std::vector<int>{0});

    CHECK(metric_dimension(gen::cycle(6)).beta == 2);
    CHECK(metric_dimension(gen::kneser(5, 2)).beta == 3);
    CHECK(metric_dimension(gen::complete(1)).beta == 0);
}

TEST_CASE("beta closed forms for complete and complete bipartite graphs") {
    for (int n = 2; n <= 8; ++n) CHECK(metric_dimension(gen::complete(n)).beta == n - 1);
    for (int s = 2; s <= 5; ++s)
        for (int t = 2; t <= 5; ++t)
            CHECK(metric_dimension(gen::complete_bipartite(s, t)).beta == s + t - 2);
}

TEST_CASE("pruned search equals the unpruned oracle on all small graphs") {
    for_each_connected_labeled_graph(6, [](const Graph& g) {
        auto r = metric_dimension(g);
        REQUIRE(r.beta == oracle::unpruned_metric_dimension(g));
        REQUIRE(is_resolving_set(g, r.basis).resolving);
    });
}

TEST_CASE("pruned search equals the unpruned oracle on random 7-vertex graphs") {
    for (int i = 0; i < 500; ++i) {
        Graph g = gen::random_connected(7, 0.3 + 0.05 * (i % 8), 42 + i);
        auto r = metric_dimension(g);
        REQUIRE(r.beta == oracle::unpruned_metric_dimension(g));
    }
}

TEST_CASE("every minimum basis respects the twin-class constraint") {
    for (int i = 0; i < 200; ++i) {
        Graph g = gen::random_connected(4 + i % 4, 0.4, 31000 + i);
        auto r = metric_dimension(g);
        for (const auto& cls : detail::twin_constraint_classes(g)) {
            int inside = 0;
            for (int v : cls)
                if (std::binary_search(r.basis.begin(), r.basis.end(), v)) ++inside;
            CHECK(inside >= static_cast<int>(cls.size()) - 1);
        }
    }
}

TEST_CASE("resolving sets are closed under supersets") {
    for (int i = 0; i < 100; ++i) {
        Graph g = gen::random_connected(6 + i % 6, 0.4, 60000 + i);
        auto basis = metric_dimension(g).basis;
        for (int v = 0; v < g.order(); ++v) {
            std::vector<int> bigger = basis;
            if (std::find(bigger.begin(), bigger.end(), v) != bigger.end()) continue;
            bigger.push_back(v);
            std::sort(bigger.begin(), bigger.end());
            CHECK(is_resolving_set(g, bigger).resolving);
        }
    }
}

TEST_CASE("canonical basis is lexicographically smallest") {
    // C_6: {0,1} is the lex-smallest pair, and it resolves
    auto r = metric_dimension(gen::cycle(6));
    CHECK(r.basis == std::vector<int>{0, 1});
    // K_5: forced to the n-1 smallest vertices
    CHECK(metric_dimension(gen::complete(5)).basis == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("budget exhaustion yields an explicit Timeout with a valid upper bound") {
    Graph petersen = gen::kneser(5, 2);
    auto r = metric_dimension(petersen, Budget{1});
    CHECK(r.status == SolveStatus::Timeout);
    CHECK(r.beta >= 3);
    CHECK(static_cast<int>(r.basis.size()) == r.beta);
    CHECK(is_resolving_set(petersen, r.basis).resolving);
}
