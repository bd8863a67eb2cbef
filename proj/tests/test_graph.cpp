#include <doctest.h>

#include "pcomp/errors.hpp"
#include "pcomp/graph.hpp"

using namespace pcomp;

TEST_CASE("make_cycle builds C_n")
{
    SUBCASE("triangle")
    {
        const auto g = make_cycle(3);
        CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    }
    SUBCASE("five vertices")
    {
        const auto g = make_cycle(5);
        CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    }
    SUBCASE("degenerate n")
    {
        CHECK_THROWS_AS(make_cycle(2), invalid_parameter);
        CHECK_THROWS_AS(make_cycle(0), invalid_parameter);
    }
}

TEST_CASE("cycles are 2-regular with n edges")
{
    for (std::size_t n = 3; n <= 40; ++n) {
        const auto g = make_cycle(n);
        CHECK(g.size() == n);
        for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
            CHECK(g.degree(v) == 2);
        }
    }
}

TEST_CASE("complement")
{
    const auto c5 = make_cycle(5);
    CHECK(complement(c5) == Graph(5, {{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}}));

    const auto k3 = Graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(complement(k3).size() == 0);
    CHECK(complement(k3).order() == 3);

    CHECK(complement(make_cycle(8)).size() == 20);

    for (std::size_t n = 3; n <= 30; ++n) {
        const auto c = make_cycle(n);
        CHECK(complement(c).size() == n * (n - 3) / 2);
        CHECK(complement(complement(c)) == c);
    }
}

TEST_CASE("is_clique")
{
    const auto co6 = complement(make_cycle(6));
    CHECK(is_clique(co6, {0, 2, 4}));
    CHECK(is_clique(make_cycle(4), {}));
    CHECK(is_clique(make_cycle(4), {3}));
    CHECK_FALSE(is_clique(make_cycle(4), {0, 1, 2}));
    CHECK_THROWS_AS(is_clique(make_cycle(4), {0, 4}), invalid_parameter);
}

TEST_CASE("is_clique agrees with pairwise adjacency")
{
    const auto g = complement(make_cycle(7));
    for (unsigned mask = 0; mask < (1u << 7); ++mask) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < 7; ++v) {
            if (mask & (1u << v)) {
                members.push_back(v);
            }
        }
        bool pairwise = true;
        for (Vertex u : members) {
            for (Vertex v : members) {
                if (u != v && !g.adjacent(u, v)) {
                    pairwise = false;
                }
            }
        }
        CHECK(is_clique(g, VertexSet(members)) == pairwise);
    }
}

TEST_CASE("graph_equals is label-sensitive")
{
    CHECK(graph_equals(make_cycle(5), make_cycle(5)));
    CHECK_FALSE(graph_equals(make_cycle(5), complement(make_cycle(5))));
    CHECK(graph_equals(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), make_cycle(4)));
    CHECK_FALSE(graph_equals(Graph(4), Graph(5)));
}

TEST_CASE("graph construction rejects malformed edges")
{
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), invalid_parameter);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), invalid_parameter);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), invalid_parameter);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), invalid_parameter);
    CHECK_THROWS_AS(Graph(0), invalid_parameter);
    // Either endpoint order is accepted.
    CHECK(Graph(3, {{2, 0}}).edges() == std::vector<Edge>{{0, 2}});
}

TEST_CASE("digraph")
{
    const Digraph d(3, {{0, 0}, {2, 1}, {0, 2}});
    CHECK(d.size() == 3);
    CHECK(d.has_arc(0, 0));
    CHECK_FALSE(d.has_arc(1, 2));
    CHECK(d.out_neighbors(0) == std::vector<Vertex>{0, 2});
    CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), invalid_parameter);
    CHECK_THROWS_AS(Digraph(3, {{0, 3}}), invalid_parameter);
}

TEST_CASE("vertex sets are canonical")
{
    const VertexSet s{4, 2, 2, 0};
    CHECK(s.members() == std::vector<Vertex>{0, 2, 4});
    CHECK(VertexSet{} < VertexSet{0});
    CHECK(VertexSet{0, 1, 2} < VertexSet{0, 2});
    CHECK(VertexSet::full(3) == VertexSet{0, 1, 2});
    CHECK_THROWS_AS(VertexSet({-1}), invalid_parameter);
}
