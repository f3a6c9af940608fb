#include <doctest.h>

#include <algorithm>
#include <map>

#include "rcvc/errors.hpp"
#include "rcvc/generators.hpp"
#include "support.hpp"

using namespace rcvc;
using rcvc::testing::graph_of;

TEST_CASE("from_edges") {
    Graph empty = Graph::from_edges({});
    CHECK(empty.num_vertices() == 0);
    CHECK(empty.num_edges() == 0);

    Graph tri = graph_of({{0, 1}, {1, 2}, {2, 0}});
    CHECK(tri.num_vertices() == 3);
    CHECK(tri.num_edges() == 3);

    Graph dup = graph_of({{0, 1}, {0, 1}, {1, 0}});
    CHECK(dup.num_edges() == 1);

    CHECK_THROWS_AS(graph_of({{4, 4}}), ParseError);
}

TEST_CASE("ids need not be contiguous and are never reused") {
    Graph g = graph_of({{10, 500}, {500, 7}});
    CHECK(g.vertices() == VertexSet{7, 10, 500});
    g.remove_vertex(500);
    VertexId fresh = g.add_vertex();
    CHECK(fresh == 501);
    CHECK_FALSE(g.contains(500));
    VertexId another = g.add_vertex();
    CHECK(another == 502);
}

TEST_CASE("remove_vertex") {
    Graph tri = gen::complete(3);
    tri.remove_vertex(1);
    CHECK(tri.num_vertices() == 2);
    CHECK(tri.num_edges() == 1);
    CHECK(tri.has_edge(0, 2));

    Graph star = gen::star(3);
    star.remove_vertex(0);
    CHECK(star.num_vertices() == 3);
    CHECK(star.num_edges() == 0);

    Graph k4 = gen::complete(4);
    k4.remove_vertex(3);
    CHECK(k4 == gen::complete(3));

    CHECK_THROWS_AS(k4.remove_vertex(3), ContractViolation);
    CHECK_THROWS_AS(k4.degree(99), ContractViolation);
}

TEST_CASE("contract_pair") {
    Graph p = graph_of({{0, 1}});
    p.contract_pair(0, 1);
    CHECK(p.num_vertices() == 1);
    CHECK(p.num_edges() == 0);

    // square a=0, b=1, c=2, d=3
    Graph sq = gen::cycle(4);
    sq.contract_pair(0, 2);
    CHECK(sq.num_edges() == 2);
    CHECK(sq.neighbors(0).size() == 2);
    CHECK(sq.has_edge(0, 1));
    CHECK(sq.has_edge(0, 3));
    CHECK_FALSE(sq.has_edge(1, 3));

    Graph tri = gen::complete(3);
    tri.contract_pair(0, 1);
    CHECK(tri.num_vertices() == 2);
    CHECK(tri.num_edges() == 1);

    CHECK_THROWS_AS(tri.contract_pair(0, 0), ContractViolation);
}

TEST_CASE("queries") {
    Graph g = gen::petersen();
    CHECK(g.max_degree() == 3);
    CHECK(g.min_degree() == 3);
    CHECK(g.closed_neighborhood(0) == VertexSet{0, 1, 4, 5});
    CHECK(g.is_connected());
    CHECK_FALSE(g.is_forest());

    Graph forest = graph_of({{0, 1}, {1, 2}, {5, 6}});
    CHECK(forest.connected_components().size() == 2);
    CHECK(forest.is_forest());
    CHECK_FALSE(forest.is_connected());
}

TEST_CASE("random edit sequences keep the graph consistent") {
    gen::Rng rng(11);
    for (int round = 0; round < 300; ++round) {
        Graph g = gen::gnp(testing::pick(rng, 1, 14), 0.35, rng);
        for (int step = 0; step < 8 && !g.empty(); ++step) {
            VertexSet vs = g.vertices();
            VertexId a = vs[gen::uniform_below(rng, vs.size())];
            VertexId b = vs[gen::uniform_below(rng, vs.size())];
            switch (gen::uniform_below(rng, 4)) {
                case 0: g.remove_vertex(a); break;
                case 1:
                    if (a != b) g.contract_pair(a, b);
                    break;
                case 2:
                    if (a != b) g.add_edge(a, b);
                    break;
                default: {
                    VertexId c = g.add_vertex();
                    g.add_edge(a, c);
                }
            }
            REQUIRE(testing::consistent(g));
        }

        std::vector<VertexSet> comps = g.connected_components();
        VertexSet all;
        for (const VertexSet& c : comps) all = set_union(all, c);
        std::size_t total = 0;
        for (const VertexSet& c : comps) total += c.size();
        CHECK(total == g.num_vertices());
        CHECK(all == g.vertices());

        // union-find: an edge joining two vertices already connected closes a cycle
        std::map<VertexId, VertexId> parent;
        for (VertexId v : g.vertices()) parent[v] = v;
        auto find = [&](VertexId v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (const Edge& e : g.edges()) {
            VertexId x = find(e.u), y = find(e.v);
            if (x == y) acyclic = false;
            parent[x] = y;
        }
        CHECK(g.is_forest() == acyclic);
        CHECK(g.is_forest() == (g.num_edges() + comps.size() == g.num_vertices()));
    }
}
