#include <doctest.h>

#include <algorithm>

#include "gdim/generators.hpp"

using namespace gdim;
using namespace gdim::gen;

TEST_CASE("standard families") {
    Graph k4 = complete(4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.diameter() == 1);

    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.diameter() == 2);
    for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) CHECK_FALSE(k23.adjacent(u, v));

    Graph c6 = cycle(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.girth() == 6);

    Graph s4 = star(4);
    CHECK(s4.order() == 5);
    CHECK(s4.degree(0) == 4);

    Graph p1 = path(1);
    CHECK(p1.order() == 1);
    CHECK(p1.edge_count() == 0);
}

TEST_CASE("kneser graphs") {
    Graph petersen = kneser(5, 2);
    CHECK(petersen.order() == 10);
    for (int v = 0; v < 10; ++v) CHECK(petersen.degree(v) == 3);
    CHECK(petersen.girth() == 5);
    CHECK(petersen.diameter() == 2);

    Graph odd7 = kneser(7, 3);
    CHECK(odd7.order() == 35);
    CHECK(odd7.min_degree() == 4);
    CHECK(odd7.max_degree() == 4);
    CHECK(odd7.girth() == 6);
    CHECK(odd7.diameter() == 3);

    Graph matching = kneser(4, 2);
    CHECK(matching.order() == 6);
    CHECK(matching.edge_count() == 3);
    CHECK_FALSE(matching.is_connected());

    CHECK_THROWS_AS(kneser(3, 2), GraphError);
}

TEST_CASE("odd kneser graphs are (k+1)-regular") {
    for (int k : {2, 3}) {
        Graph g = kneser(2 * k + 1, k);
        CHECK(g.min_degree() == k + 1);
        CHECK(g.max_degree() == k + 1);
    }
}

TEST_CASE("subdivided wheels") {
    Graph sw6 = subdivided_wheel(6);
    CHECK(sw6.order() == 19);
    CHECK(sw6.edge_count() == 24);
    CHECK(sw6.degree(0) == 6);
    CHECK(sw6.diameter() <= 6);

    for (int k = 3; k <= 8; ++k) {
        Graph g = subdivided_wheel(k);
        CHECK(g.order() == 3 * k + 1);
        auto d = g.degree_sequence();
        CHECK(std::count(d.begin(), d.end(), k == 3 ? 3 : k) >= 1);
        CHECK(d.front() == std::max(k, 3));
        CHECK(std::count(d.begin(), d.end(), 2) == 2 * k);
        CHECK(std::count(d.begin(), d.end(), 3) == (k == 3 ? k + 1 : k));
    }

    CHECK_THROWS_AS(subdivided_wheel(2), GraphError);
}

TEST_CASE("range violations") {
    CHECK_THROWS_AS(complete(0), GraphError);
    CHECK_THROWS_AS(cycle(2), GraphError);
    CHECK_THROWS_AS(star(0), GraphError);
    CHECK_THROWS_AS(complete_bipartite(0, 3), GraphError);
    CHECK_THROWS_AS(path(0), GraphError);
}

TEST_CASE("random connected graphs") {
    Graph k1 = random_connected(1, 0.5, 7);
    CHECK(k1.order() == 1);

    Graph kn = random_connected(6, 1.0, 7);
    CHECK(kn.edge_count() == 15);

    Graph a = random_connected(12, 0.3, 42);
    Graph b = random_connected(12, 0.3, 42);
    REQUIRE(a.order() == b.order());
    for (int v = 0; v < a.order(); ++v) REQUIRE(a.neighbors(v) == b.neighbors(v));

    Graph c = random_connected(12, 0.3, 43);
    bool identical = true;
    for (int v = 0; v < 12 && identical; ++v) identical = c.neighbors(v) == a.neighbors(v);
    CHECK_FALSE(identical);

    CHECK(random_connected(15, 0.25, 99).is_connected());
    CHECK_THROWS_AS(random_connected(5, 0.0, 1), GraphError);
}
