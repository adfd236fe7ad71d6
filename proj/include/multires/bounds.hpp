#pragma once

#include <multires/graph.hpp>
#include <multires/solver.hpp>

#include <optional>
#include <string>
#include <vector>

namespace multires
{
    /// Smallest positive k with C(k+d-1, d-1) + C(k+d-2, d-1) - d + 1 >= chi.
    /// Counts the distinct multisets available to k landmarks in a graph of diameter d,
    /// so it bounds lmd and ldim_ms from below. Requires d >= 2 and chi >= 1.
    auto g_bound(int d, int chi) -> int;

    enum class BoundSource
    {
        trivial,
        clique_log,
        chromatic_gdchi,
        nonbipartite_2,
        k_end_count,
        n_minus_1
    };

    auto to_string(BoundSource s) -> std::string;

    struct Bound
    {
        Variant variant;
        int value;
        BoundSource source;
    };

    enum class InfiniteReason
    {
        diam_le_2,
        triple_open_neighbourhood,
        triple_k_end
    };

    auto to_string(InfiniteReason r) -> std::string;

    struct InfiniteCertificate
    {
        Variant variant;
        InfiniteReason reason;
        /// The diameter, the twin triple, or the clique with its K-end vertices.
        VertexSet witness;
        VertexSet clique;
        int diameter = 0;
        std::string description;
    };

    struct BoundReport
    {
        /// Every applicable lower bound, not only the best.
        std::vector<Bound> lower;
        std::vector<Bound> upper;
        std::vector<InfiniteCertificate> infinite;
        /// Bounds that could not be evaluated, e.g. because an exact invariant hit its cap.
        std::vector<std::string> skipped;

        /// Best lower bound for v; 1 when nothing applies.
        auto best_lower(Variant v) const -> Bound;
    };

    auto lower_bounds(const Graph & g, InvariantCaps caps = {}) -> BoundReport;

    /// Structural proofs that md or lmd is infinite.
    auto infinite_certificates(const Graph & g, int clique_cap = InvariantCaps{}.clique) -> std::vector<InfiniteCertificate>;

    /// dim_ms = n - 1 exactly when g is regular with diameter at most 2.
    auto dms_extremal_check(const Graph & g, const DimensionResult & dim_ms) -> bool;

    struct MaxSubgraphBound
    {
        VertexSet core;
        Graph subgraph;
        std::vector<Vertex> mapping;
    };

    /// The 2-core H of g; lmd(g) <= lmd(H) when the latter is finite and ldim_ms(g) <= ldim_ms(H).
    /// nullopt for trees.
    auto maxsubgraph_bound(const Graph & g) -> std::optional<MaxSubgraphBound>;
}
