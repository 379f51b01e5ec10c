#include <doctest.h>

#include "gdim/generators.hpp"
#include "gdim/graph.hpp"
#include "gdim/verify.hpp"
#include "oracles.hpp"

using namespace gdim;

TEST_CASE("build_graph basics") {
    Graph k3 = build_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    Graph p2 = build_graph(2, {{0, 1}});
    CHECK(p2.edge_count() == 1);
    CHECK(p2.adjacent(0, 1));

    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(build_graph(0, {}), GraphError);

    // duplicate edges collapse silently
    Graph dup = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("all-pairs distances") {
    Graph k4 = gen::complete(4);
    const auto& d = k4.all_pairs_distances();
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) CHECK(d.at(u, v) == (u == v ? 0 : 1));

    Graph p3 = gen::path(3);
    CHECK(p3.all_pairs_distances().at(0, 2) == 2);

    Graph c4 = gen::cycle(4);
    CHECK(c4.distance(0, 2) == 2);
    CHECK(c4.distance(1, 3) == 2);

    Graph disc = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(disc.is_connected());
    CHECK_THROWS_WITH_AS(disc.all_pairs_distances(),
                         doctest::Contains("no path between vertices 0 and 2"), GraphError);
}

TEST_CASE("diameter") {
    for (int n = 2; n <= 6; ++n) CHECK(gen::complete(n).diameter() == 1);
    CHECK(gen::path(5).diameter() == 4);
    CHECK(gen::kneser(7, 3).diameter() == 3);
}

TEST_CASE("girth") {
    CHECK(gen::cycle(5).girth() == 5);
    CHECK(gen::complete(4).girth() == 3);
    CHECK(gen::kneser(7, 3).girth() == 6);
    CHECK_FALSE(gen::path(4).girth().has_value());
}

TEST_CASE("girth matches the per-edge brute force") {
    for_each_connected_labeled_graph(6, [](const Graph& g) {
        int brute = oracle::brute_force_girth(g);
        auto girth = g.girth();
        if (brute < 0)
            CHECK_FALSE(girth.has_value());
        else
            CHECK(*girth == brute);
    });
    for (int i = 0; i < 200; ++i) {
        Graph g = gen::random_connected(7 + i % 2, 0.35, 900 + i);
        int brute = oracle::brute_force_girth(g);
        auto girth = g.girth();
        if (brute < 0)
            CHECK_FALSE(girth.has_value());
        else
            CHECK(*girth == brute);
        if (girth) CHECK(*girth >= 3);
    }
}

TEST_CASE("degree sequence") {
    CHECK(gen::complete_bipartite(2, 3).degree_sequence() == std::vector<int>{3, 3, 2, 2, 2});
    CHECK(gen::cycle(6).degree_sequence() == std::vector<int>(6, 2));

    auto d = gen::subdivided_wheel(6).degree_sequence();
    std::vector<int> expected{6};
    expected.insert(expected.end(), 6, 3);
    expected.insert(expected.end(), 12, 2);
    CHECK(d == expected);
}

TEST_CASE("false twin partition") {
    auto classes = gen::complete_bipartite(2, 3).false_twin_partition().classes;
    REQUIRE(classes.size() == 2);
    CHECK(classes[0] == std::vector<int>{0, 1});
    CHECK(classes[1] == std::vector<int>{2, 3, 4});

    auto c4 = gen::cycle(4).false_twin_partition().classes;
    REQUIRE(c4.size() == 2);
    CHECK(c4[0] == std::vector<int>{0, 2});
    CHECK(c4[1] == std::vector<int>{1, 3});

    CHECK(gen::path(4).false_twin_partition().classes.size() == 4);
}

TEST_CASE("false twin partition matches pairwise neighborhood comparison") {
    for (int i = 0; i < 100; ++i) {
        Graph g = gen::random_connected(4 + i % 7, 0.4, 1234 + i);
        auto part = g.false_twin_partition();
        std::vector<int> class_of(g.order(), -1);
        int covered = 0;
        for (std::size_t c = 0; c < part.classes.size(); ++c)
            for (int v : part.classes[c]) {
                CHECK(class_of[v] == -1); // disjoint
                class_of[v] = static_cast<int>(c);
                ++covered;
            }
        CHECK(covered == g.order()); // cover V
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                CHECK((class_of[u] == class_of[v]) == (g.neighbors(u) == g.neighbors(v)));
    }
}

TEST_CASE("is_connected") {
    CHECK(gen::complete(3).is_connected());
    CHECK(gen::path(10).is_connected());
    CHECK_FALSE(build_graph(4, {{0, 1}, {2, 3}}).is_connected());
}

TEST_CASE("distance matrix symmetry and triangle inequality on random graphs") {
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + i % 29;
        Graph g = gen::random_connected(n, 0.5, 5000 + i);
        const auto& d = g.all_pairs_distances();
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            ok = d.at(u, u) == 0;
            for (int v = 0; v < n && ok; ++v) {
                ok = d.at(u, v) == d.at(v, u) && ((d.at(u, v) == 1) == g.adjacent(u, v));
                for (int w = 0; w < n && ok; ++w) ok = d.at(u, v) <= d.at(u, w) + d.at(w, v);
            }
        }
        REQUIRE(ok);
    }
}
