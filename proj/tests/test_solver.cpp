#include "oracle.hpp"

#include <multires/errors.hpp>
#include <multires/generators.hpp>
#include <multires/solver.hpp>

#include <doctest.h>

#include <random>

using namespace multires;

namespace
{
    auto solve(const Graph & g, Variant v, SolverOptions opts = {}) -> DimValue
    {
        return dimension(g, v, opts).value;
    }

    auto fin(int k) { return DimValue::finite(k); }
    auto inf() { return DimValue::infinite(); }

    auto random_connected(std::mt19937 & rng, int n, double p) -> Graph
    {
        Graph g(n);
        for (int v = 1; v < n; ++v)
            g.add_edge(v, static_cast<int>(rng() % v));
        std::bernoulli_distribution coin(p);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    g.add_edge(u, v);
        return g;
    }
}

TEST_SUITE("solver")
{
    TEST_CASE("dim values order infinity last")
    {
        CHECK(fin(3) < inf());
        CHECK(fin(1) < fin(2));
        CHECK(to_string(inf()) == "infinity");
        CHECK(to_string(fin(4)) == "4");
    }

    TEST_CASE("worked examples")
    {
        auto c6 = dimension(cycle_graph(6), Variant::lmd);
        CHECK(c6.value == fin(1));
        CHECK(c6.witness == VertexSet::of({0}));

        CHECK(solve(cycle_graph(7), Variant::lmd) == fin(3));
        CHECK(solve(cycle_graph(5), Variant::lmd) == inf());
        CHECK(solve(cycle_graph(5), Variant::ldim_ms) == fin(2));
        CHECK(solve(complete_graph(6), Variant::ldim_ms) == fin(5));
        CHECK(solve(complete_graph(2), Variant::lmd) == fin(1));
        CHECK(solve(cycle_graph(5), Variant::md) == inf());
        CHECK(solve(path_graph(5), Variant::ldim) == fin(1));
        CHECK(solve(complete_graph(1), Variant::dim) == fin(1));
    }

    TEST_CASE("infinity is certified both ways")
    {
        auto shortcut = dimension(cycle_graph(5), Variant::md);
        REQUIRE(shortcut.certificate.has_value());
        CHECK(shortcut.certificate->starts_with("diam_le_2"));
        CHECK_FALSE(shortcut.witness.has_value());

        auto exhaustive = dimension(cycle_graph(5), Variant::md, SolverOptions::naive());
        CHECK(exhaustive.value == inf());
        CHECK(*exhaustive.certificate == "exhausted all 2^5 - 1 subsets");
        CHECK(exhaustive.subsets_checked == 31);

        auto kend = dimension(complete_graph(4), Variant::lmd);
        CHECK(kend.certificate->starts_with("triple_k_end"));
    }

    TEST_CASE("caps and budgets")
    {
        SolverOptions opts;
        opts.vertex_cap = 5;
        CHECK_THROWS_AS(dimension(path_graph(6), Variant::dim, opts), CapExceeded);

        opts = SolverOptions::naive();
        opts.subset_budget = 10;
        CHECK_THROWS_AS(dimension(cycle_graph(7), Variant::lmd, opts), BudgetExhausted);
        opts.subset_budget = 1000;
        CHECK(dimension(cycle_graph(7), Variant::lmd, opts).value == fin(3));

        Graph split(3);
        split.add_edge(0, 1);
        CHECK_THROWS_AS(dimension(split, Variant::dim), ConnectivityError);
    }

    TEST_CASE("certify")
    {
        CHECK(certify(cycle_graph(4), VertexSet::of({0}), Variant::lmd).valid);
        CHECK(certify(wheel_graph(6), VertexSet::of({0, 2, 4}), Variant::lmd).valid);
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) {
                auto c = certify(complete_graph(4), VertexSet::of({a, b}), Variant::lmd);
                CHECK_FALSE(c.valid);
                CHECK_FALSE(c.violating.empty());
            }
        CHECK_THROWS_AS(certify(cycle_graph(4), VertexSet{}, Variant::lmd), ValidationError);
        CHECK_THROWS_AS(certify(cycle_graph(4), VertexSet::of({4}), Variant::lmd), ValidationError);
    }

    TEST_CASE("required vertices")
    {
        auto amal = required_vertices(amalgamation({3, 3}), Variant::lmd);
        REQUIRE(amal.constraints.size() == 2);
        CHECK(amal.constraints[0].set == VertexSet::of({1, 2}));
        CHECK(amal.constraints[0].at_least == 1);
        CHECK(amal.constraints[0].at_most == 1);
        CHECK_FALSE(amal.contradiction.has_value());

        CHECK(required_vertices(amalgamation({4, 3}), Variant::lmd).contradiction.has_value());
        CHECK(required_vertices(cycle_graph(6), Variant::lmd).constraints.empty());
        CHECK(required_vertices(cycle_graph(6), Variant::md).constraints.empty());

        auto outer = required_vertices(amalgamation({4, 3}), Variant::ldim_ms);
        REQUIRE(outer.constraints.size() == 2);
        CHECK(outer.constraints[0].set == VertexSet::of({1, 2, 3}));
        CHECK(outer.constraints[0].at_least == 2);
        CHECK_FALSE(outer.constraints[0].derived_from_proof);
        CHECK(outer.constraints[1].at_least == 1);
        CHECK(outer.constraints[1].derived_from_proof);
    }

    TEST_CASE("oracle equivalence on every connected graph with n <= 6")
    {
        for (int n = 1; n <= 6; ++n)
            for_each_connected(n, [&] (const Graph & g) {
                for (auto v : all_variants) {
                    auto want = oracle::dimension(g, v);
                    auto got = dimension(g, v);
                    if (want.value < 0) {
                        REQUIRE(got.value == inf());
                        REQUIRE(may_be_infinite(v));
                    }
                    else {
                        REQUIRE(got.value == fin(want.value));
                        REQUIRE(got.witness->to_vector() == want.witness);
                    }
                }
            });
    }

    TEST_CASE("witness invariants")
    {
        std::mt19937 rng(5);
        for (int t = 0; t < 60; ++t) {
            auto g = random_connected(rng, 2 + t % 7, 0.35);
            DistMatrix dm(g);
            for (auto v : all_variants) {
                auto r = dimension(g, v);
                if (r.value.is_infinite())
                    continue;
                REQUIRE(r.witness->size() == r.value.value());
                REQUIRE(certify(g, *r.witness, v).valid);
                if (! may_be_infinite(v))
                    REQUIRE(r.value.value() <= std::max(1, g.order() - 1));
                // nothing smaller, and nothing lexicographically earlier of the same size
                for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
                    VertexSet w{bits};
                    if (w.size() < r.value.value() || (w.size() == r.value.value() && lex_less(w, *r.witness)))
                        REQUIRE_FALSE(is_resolving(dm, g, w, v));
                }
            }
        }
    }

    TEST_CASE("determinism across shards and pruning")
    {
        std::mt19937 rng(9);
        for (int t = 0; t < 40; ++t) {
            auto g = random_connected(rng, 4 + t % 6, 0.4);
            for (auto v : all_variants) {
                auto base = dimension(g, v, SolverOptions::naive());
                for (int shards : {1, 2, 3, 8})
                    for (bool prune : {false, true}) {
                        SolverOptions o;
                        o.parallel_shards = shards;
                        o.use_structural_pruning = prune;
                        o.use_infinite_shortcuts = prune;
                        auto r = dimension(g, v, o);
                        REQUIRE(r.value == base.value);
                        REQUIRE(r.witness == base.witness);
                    }
            }
        }
    }

    TEST_CASE("K-end constraints hold for every resolving set")
    {
        for (int n = 3; n <= 6; ++n)
            for_each_connected(n, [&] (const Graph & g) {
                DistMatrix dm(g);
                for (auto v : {Variant::lmd, Variant::ldim_ms}) {
                    auto req = required_vertices(g, v);
                    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
                        VertexSet w{bits};
                        if (! is_resolving(dm, g, w, v))
                            continue;
                        REQUIRE_FALSE(req.contradiction.has_value());
                        for (auto & c : req.constraints)
                            REQUIRE(c.admits(w));
                    }
                }
            });
    }

    TEST_CASE("minimum bases")
    {
        auto bases = minimum_bases(cycle_graph(6), Variant::lmd);
        CHECK(bases.size() == 6);
        CHECK(bases.front() == VertexSet::of({0}));
        CHECK(minimum_bases(cycle_graph(5), Variant::lmd).empty());

        auto w6 = minimum_bases(wheel_graph(6), Variant::lmd);
        REQUIRE_FALSE(w6.empty());
        CHECK(w6.front() == dimension(wheel_graph(6), Variant::lmd).witness);
        for (auto b : w6)
            CHECK(b.size() == 3);
    }

    TEST_CASE("observation chain")
    {
        for (int n = 2; n <= 6; ++n)
            for_each_connected(n, [&] (const Graph & g) {
                DimValue d[6] = {inf(), inf(), inf(), inf(), inf(), inf()};
                for (auto v : all_variants)
                    d[static_cast<int>(v)] = dimension(g, v).value;
                auto at = [&] (Variant v) { return d[static_cast<int>(v)]; };
                REQUIRE(fin(1) <= at(Variant::ldim));
                REQUIRE(at(Variant::ldim) <= at(Variant::dim));
                REQUIRE(at(Variant::dim) <= at(Variant::dim_ms));
                REQUIRE(at(Variant::dim_ms) <= at(Variant::md));
                REQUIRE(at(Variant::ldim_ms) <= at(Variant::dim_ms));
                REQUIRE(at(Variant::dim_ms) <= fin(n - 1));
                REQUIRE(at(Variant::ldim) <= at(Variant::ldim_ms));
                REQUIRE(at(Variant::ldim_ms) <= at(Variant::lmd));
                REQUIRE(at(Variant::lmd) <= at(Variant::md));
            });
    }
}
