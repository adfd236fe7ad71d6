#include "oracle.hpp"

#include <multires/errors.hpp>
#include <multires/generators.hpp>
#include <multires/multiset.hpp>
#include <multires/solver.hpp>

#include <doctest.h>

#include <set>

using namespace multires;

namespace
{
    // id of u_{j,i}, the i-th vertex on the path hung from u_j
    auto path_vertex(const CliqueGadget & g, int j, int i) -> int
    {
        return g.clique.size() + j * (j - 1) + i - 1;
    }
}

TEST_SUITE("generators")
{
    TEST_CASE("family shapes")
    {
        auto w5 = gen(parse_family_spec("wheel:5"));
        CHECK(w5.order() == 6);
        CHECK(w5.size() == 10);
        CHECK(w5.degree(5) == 5);

        auto star = gen(parse_family_spec("amal:2,2,2"));
        CHECK(star == star_graph(3));

        CHECK(gen(parse_family_spec("edge_amal:2,2")) == complete_graph(2));

        auto cor = gen(parse_family_spec("corona:path:3/2,2,2"));
        CHECK(cor.order() == 9);
        CHECK(cor.size() == 2 + 3 * 3);
        CHECK(maximal_cliques(cor).size() == 5);

        auto uni = gen(parse_family_spec("unicyclic:5/1:0"));
        CHECK(uni.order() == 6);
        CHECK(uni.size() == 6);
        CHECK(uni.adjacent(1, 5));

        auto j = gen(parse_family_spec("join:cycle:4+complete:1"));
        CHECK(j == wheel_graph(4));

        CHECK(gen(parse_family_spec("edge_amal:3,4")).order() == 5);
        CHECK(gen(parse_family_spec("amal:1,3")) == complete_graph(3));
    }

    TEST_CASE("spec strings round trip")
    {
        for (auto text : {"path:4", "cycle:7", "complete:5", "star:3", "wheel:8", "amal:3,3,4", "edge_amal:2,4",
                 "corona:path:3/2,2,2", "corona:cycle:4/1,2,1,2", "join:cycle:4+complete:1", "unicyclic:5/1:0,1/3:0",
                 "unicyclic:6", "gadget:8"})
            CHECK(to_string(parse_family_spec(text)) == text);
    }

    TEST_CASE("parameter validation")
    {
        for (auto bad : {"wheel:2", "amal:3", "amal:0,3", "edge_amal:1,3", "cycle:2", "corona:path:3/2,2", "gadget:1",
                 "unicyclic:4/5:0", "unicyclic:4/1:1", "nonsense:3", "path:x", "path:", "corona:path:3"})
            CHECK_THROWS_AS(gen(parse_family_spec(bad)), ValidationError);
    }

    TEST_CASE("generated graphs are connected with the documented parities")
    {
        for (int n = 3; n <= 12; ++n) {
            auto c = cycle_graph(n);
            CHECK(c.connected());
            CHECK(two_colouring(c).has_value() == (n % 2 == 0));
            auto w = wheel_graph(n);
            CHECK(DistMatrix(w).diameter() == (n == 3 ? 1 : 2));
            CHECK(w.degree(n) == n);
        }
        for (auto & text : {"amal:3,4,2", "edge_amal:3,3,4", "corona:star:3/1,2,1,2", "unicyclic:3/0:0,1,1"})
            CHECK(gen(parse_family_spec(text)).connected());
    }

    TEST_CASE("connected graph enumeration")
    {
        auto count = [] (int n) {
            int c = 0;
            for_each_connected(n, [&] (const Graph &) { ++c; });
            return c;
        };
        CHECK(count(1) == 1);
        CHECK(count(3) == 4);

        // brute-force counts from the oracle's own enumeration
        for (int n = 2; n <= 5; ++n) {
            int expected = 0;
            oracle::all_graphs(n, [&] (const oracle::Matrix & a) { expected += oracle::connected(a); });
            CHECK(count(n) == expected);
        }
        CHECK(count(4) == 38);

        std::set<std::string> seen;
        for_each_connected(5, [&] (const Graph & g) { REQUIRE(seen.insert(to_graph6(g)).second); });

        CHECK_THROWS_AS(ConnectedGraphs(8), CapExceeded);
        CHECK_THROWS_AS(ConnectedGraphs(0), ValidationError);
    }

    TEST_CASE("clique gadget: n=8 instance")
    {
        auto g = gen_clique_gadget(8);
        CHECK(g.k == 3);
        CHECK(g.graph.order() == 20);
        CHECK(clique_number(g.graph) == 8);
        CHECK(g.clique.size() == 8);
        CHECK(g.landmarks == VertexSet::of({path_vertex(g, 1, 2), path_vertex(g, 2, 4), path_vertex(g, 3, 6)}));
        CHECK(certify(g.graph, g.landmarks, Variant::lmd).valid);
        CHECK(certify(g.graph, g.landmarks, Variant::ldim_ms).valid);

        DistMatrix dm(g.graph);
        // v_0 all even, the last v all odd
        auto v0 = g.k;
        CHECK(g.v_index[v0] == 0);
        CHECK(representation_multiset(dm, v0, g.landmarks) == Multiset{{2, 4, 6}});
        auto last = g.clique.size() - 1;
        CHECK(g.v_index[last] == 4);
        CHECK(representation_multiset(dm, last, g.landmarks) == Multiset{{3, 5, 7}});

        for (int j = 1; j <= 3; ++j)
            for (int l = 1; l <= 3; ++l)
                CHECK(dm(path_vertex(g, j, 1), path_vertex(g, l, 2 * l)) == (j == l ? 2 * l - 1 : 2 * l + 1));
    }

    TEST_CASE("clique gadget: labels are realised and distinct")
    {
        for (int n = 2; n <= 16; ++n) {
            auto g = gen_clique_gadget(n);
            CHECK(clique_number(g.graph, 64) == n);
            DistMatrix dm(g.graph);
            std::set<std::vector<int>> bags;
            for (auto x : g.clique.to_vector()) {
                auto label = g.labels[x];
                REQUIRE(label.size() == static_cast<std::size_t>(g.k));
                for (int j = 1; j <= g.k; ++j)
                    REQUIRE((label[j - 1] == 2 * j || label[j - 1] == 2 * j + 1));
                // distances to the landmarks realise the label
                if (n > 2)
                    for (int j = 1; j <= g.k; ++j)
                        REQUIRE(dm(x, path_vertex(g, j, 2 * j)) == label[j - 1]);
                bags.insert(representation_multiset(dm, x, g.landmarks).values());
            }
            if (n > 2)
                CHECK(bags.size() == static_cast<std::size_t>(n));
            CHECK(certify(g.graph, g.landmarks, Variant::lmd).valid);
            CHECK(certify(g.graph, g.landmarks, Variant::ldim_ms).valid);
        }
        CHECK_THROWS_AS(gen_clique_gadget(1), ValidationError);
    }

    TEST_CASE("clique gadget: exact dimensions for small n")
    {
        auto g4 = gen_clique_gadget(4);
        CHECK(g4.graph.order() == 4 + 2 + 4);
        CHECK(dimension(g4.graph, Variant::lmd).value == DimValue::finite(2));
        CHECK(dimension(g4.graph, Variant::ldim_ms).value == DimValue::finite(2));
        for (int n = 5; n <= 8; ++n) {
            auto g = gen_clique_gadget(n);
            CHECK(dimension(g.graph, Variant::lmd).value == DimValue::finite(3));
            CHECK(dimension(g.graph, Variant::ldim_ms).value == DimValue::finite(3));
        }
    }
}
