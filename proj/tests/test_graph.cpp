#include "oracle.hpp"

#include <multires/errors.hpp>
#include <multires/generators.hpp>
#include <multires/graph.hpp>

#include <doctest.h>

#include <random>

using namespace multires;

TEST_SUITE("graph")
{
    TEST_CASE("vertex sets")
    {
        auto s = VertexSet::of({3, 0, 5});
        CHECK(s.size() == 3);
        CHECK(s.contains(5));
        CHECK_FALSE(s.contains(1));
        CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
        CHECK(to_string(s) == "{0,3,5}");
        CHECK((s - VertexSet::of({3})) == VertexSet::of({0, 5}));
        CHECK(VertexSet::first_n(64).size() == 64);
        // lexicographic order of sorted lists, not numeric order of masks
        CHECK(lex_less(VertexSet::of({0, 3}), VertexSet::of({1, 2})));
        CHECK(lex_less(VertexSet::of({0, 1, 5}), VertexSet::of({0, 2, 3})));
    }

    TEST_CASE("edge list parsing")
    {
        auto p3 = parse_edge_list("0 1\n1 2");
        CHECK(p3.order() == 3);
        CHECK(p3.size() == 2);

        auto k3 = parse_edge_list("0 1\n1 2\n2 0");
        CHECK(k3 == complete_graph(3));

        auto dup = parse_edge_list("# comment\n0 1\n1 0\n\n0 1\n");
        CHECK(dup.size() == 1);

        CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError);
        CHECK_THROWS_AS(parse_edge_list("0 1\n1 x"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("-1 2"), ParseError);
        CHECK_THROWS_AS(parse_edge_list(""), InputError);
        try {
            parse_edge_list("0 1\n\n2 q\n");
            FAIL("no exception");
        }
        catch (const ParseError & e) {
            CHECK(e.line() == 3);
        }
    }

    TEST_CASE("graph6")
    {
        auto k3 = complete_graph(3);
        CHECK(to_graph6(k3) == "Bw");
        CHECK(parse_graph6("Bw") == k3);

        auto star = parse_graph6("D?{");
        CHECK(star.order() == 5);
        CHECK(to_graph6(star) == "D?{");
        CHECK(star.degree(4) == 4);

        CHECK_THROWS_AS(parse_graph6(""), ParseError);
        CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
        CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
        CHECK_THROWS_AS(parse_graph6("Bx"), ParseError); // non-zero padding bits

        // round trip over every connected graph with n <= 6
        for (int n = 1; n <= 6; ++n)
            for_each_connected(n, [&] (const Graph & g) {
                REQUIRE(parse_graph6(to_graph6(g)) == g);
            });

        // long header form
        auto big = path_graph(63);
        auto text = to_graph6(big);
        CHECK(text[0] == '~');
        CHECK(parse_graph6(text) == big);
    }

    TEST_CASE("distances")
    {
        CHECK(DistMatrix(cycle_graph(4))(0, 2) == 2);
        CHECK(DistMatrix(path_graph(4))(0, 3) == 3);

        DistMatrix w5(wheel_graph(5));
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j)
                CHECK(w5(i, j) <= 2);

        Graph split(4);
        split.add_edge(0, 1);
        split.add_edge(2, 3);
        CHECK_THROWS_AS(DistMatrix{split}, ConnectivityError);
        try {
            DistMatrix{split};
        }
        catch (const ConnectivityError & e) {
            CHECK(split.adjacent(e.first(), e.second()) == false);
        }
    }

    TEST_CASE("distance matrix agrees with Floyd-Warshall on the corpus")
    {
        for (int n = 1; n <= 6; ++n)
            for_each_connected(n, [&] (const Graph & g) {
                DistMatrix dm(g);
                auto ref = oracle::distances(oracle::adjacency(g));
                int diameter = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) {
                        REQUIRE(dm(u, v) == ref[u][v]);
                        REQUIRE(dm(u, v) == dm(v, u));
                        REQUIRE((dm(u, v) == 1) == g.adjacent(u, v));
                        for (int w = 0; w < n; ++w)
                            REQUIRE(dm(u, w) <= dm(u, v) + dm(v, w));
                        diameter = std::max(diameter, ref[u][v]);
                    }
                REQUIRE(dm.diameter() == diameter);
            });
    }

    TEST_CASE("classical invariants")
    {
        auto k5 = complete_graph(5);
        auto inv = invariants(k5, DistMatrix(k5));
        CHECK(inv.omega == 5);
        CHECK(inv.chi == 5);
        CHECK(inv.diameter == 1);
        CHECK_FALSE(inv.bipartite);

        auto c6 = cycle_graph(6);
        inv = invariants(c6, DistMatrix(c6));
        CHECK(inv.omega == 2);
        CHECK(inv.chi == 2);
        CHECK(inv.diameter == 3);
        CHECK(inv.bipartite);
        for (auto [u, v] : c6.edges())
            CHECK(inv.two_colouring[u] != inv.two_colouring[v]);

        // odd rim needs a third colour, plus one for the hub
        for (int n = 3; n <= 10; ++n)
            CHECK(chromatic_number(wheel_graph(n)) == (n % 2 == 0 ? 3 : 4));

        CHECK_THROWS_AS(chromatic_number(path_graph(17)), CapExceeded);
        CHECK_THROWS_AS(clique_number(path_graph(21)), CapExceeded);
        CHECK(chromatic_number(path_graph(17), 17) == 2);
    }

    TEST_CASE("omega and chi against brute force")
    {
        for (int n = 1; n <= 6; ++n)
            for_each_connected(n, [&] (const Graph & g) {
                auto adj = oracle::adjacency(g);
                auto omega = clique_number(g);
                auto chi = chromatic_number(g);
                REQUIRE(omega == oracle::clique_number(adj));
                REQUIRE(chi == oracle::chromatic_number(adj));
                REQUIRE(omega <= chi);
                REQUIRE(two_colouring(g).has_value() == oracle::bipartite(adj));
            });
    }

    TEST_CASE("maximal cliques")
    {
        auto cliques = maximal_cliques(amalgamation({3, 3}));
        REQUIRE(cliques.size() == 2);
        CHECK(cliques[0] == VertexSet::of({0, 1, 2}));
        CHECK(cliques[1] == VertexSet::of({0, 3, 4}));

        std::mt19937 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 2 + trial % 9;
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng() % 2)
                        g.add_edge(u, v);
            auto found = maximal_cliques(g);
            // every reported set is a clique and cannot be extended
            for (auto c : found) {
                for (auto u : c.to_vector())
                    for (auto v : c.to_vector())
                        REQUIRE((u == v || g.adjacent(u, v)));
                for (int x = 0; x < n; ++x)
                    if (! c.contains(x))
                        REQUIRE((g.neighbours(x) & c) != c);
            }
            REQUIRE(std::is_sorted(found.begin(), found.end(), lex_less));
        }
    }

    TEST_CASE("distance layers")
    {
        auto layers = distance_layers(DistMatrix(cycle_graph(4)), 0);
        REQUIRE(layers.size() == 3);
        CHECK(layers[0] == VertexSet::of({0}));
        CHECK(layers[1] == VertexSet::of({1, 3}));
        CHECK(layers[2] == VertexSet::of({2}));

        layers = distance_layers(DistMatrix(star_graph(4)), 0);
        REQUIRE(layers.size() == 2);
        CHECK(layers[1] == VertexSet::of({1, 2, 3, 4}));

        DistMatrix p5(path_graph(5));
        layers = distance_layers(p5, 0);
        CHECK(layers.size() == 5);
        CHECK(static_cast<int>(layers.size()) == p5.eccentricity(0) + 1);
        for (auto l : layers)
            CHECK(l.size() == 1);
    }

    TEST_CASE("two-core")
    {
        auto c5_pendant = unicyclic(5, {{0, {0}}});
        CHECK(two_core(c5_pendant) == VertexSet::first_n(5));

        auto c4_corona = corona(cycle_graph(4), {1, 1, 1, 1});
        CHECK(two_core(c4_corona) == VertexSet::first_n(4));

        CHECK_FALSE(two_core(path_graph(4)).has_value());
        CHECK_FALSE(two_core(complete_graph(1)).has_value());

        for (int n = 3; n <= 6; ++n)
            for_each_connected(n, [&] (const Graph & g) {
                auto core = two_core(g);
                if (! core) {
                    REQUIRE(g.size() == static_cast<std::size_t>(n - 1));
                    return;
                }
                for (auto v : core->to_vector())
                    REQUIRE((g.neighbours(v) & *core).size() >= 2);
                // stripped vertices form trees, each joined to the core by one edge,
                // so they account for exactly one edge apiece
                auto rest = g.vertices() - *core;
                std::size_t rest_edges = 0, attaching = 0;
                for (auto [u, v] : g.edges()) {
                    bool ur = rest.contains(u), vr = rest.contains(v);
                    rest_edges += ur && vr;
                    attaching += ur != vr;
                }
                REQUIRE(rest_edges + attaching == static_cast<std::size_t>(rest.size()));
            });
    }

    TEST_CASE("K-end structure")
    {
        auto k4 = k_end_structure(complete_graph(4));
        REQUIRE(k4.size() == 1);
        CHECK(k4[0].ends.size() == 4);

        auto amal = k_end_structure(amalgamation({3, 3}));
        REQUIRE(amal.size() == 2);
        CHECK(amal[0].ends == VertexSet::of({1, 2}));
        CHECK(amal[1].ends == VertexSet::of({3, 4}));

        CHECK(k_end_structure(cycle_graph(6)).empty());
    }

    TEST_CASE("regularity and induced subgraphs")
    {
        CHECK(is_regular(cycle_graph(5)));
        CHECK_FALSE(is_regular(path_graph(4)));

        std::vector<Vertex> mapping;
        auto h = wheel_graph(5).induced(VertexSet::first_n(5), &mapping);
        CHECK(h == cycle_graph(5));
        CHECK(mapping == std::vector<int>{0, 1, 2, 3, 4});

        Graph g(3);
        CHECK_THROWS_AS(g.add_edge(1, 1), ValidationError);
        CHECK_THROWS_AS(g.add_edge(0, 3), ValidationError);
    }
}
