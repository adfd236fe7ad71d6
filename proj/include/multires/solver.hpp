#pragma once

#include <multires/graph.hpp>
#include <multires/multiset.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace multires
{
    /// A dimension value: a positive integer or infinity. Every finite value orders below infinity.
    class DimValue
    {
    public:
        static constexpr auto finite(int k) -> DimValue { return DimValue{k}; }
        static constexpr auto infinite() -> DimValue { return DimValue{-1}; }

        constexpr auto is_infinite() const -> bool { return _k < 0; }
        constexpr auto is_finite() const -> bool { return _k >= 0; }
        /// Only meaningful when finite.
        constexpr auto value() const -> int { return _k; }

        constexpr auto operator== (const DimValue &) const -> bool = default;
        constexpr auto operator<=> (const DimValue & other) const -> std::strong_ordering
        {
            if (is_infinite() || other.is_infinite())
                return is_infinite() <=> other.is_infinite();
            return _k <=> other._k;
        }

    private:
        constexpr explicit DimValue(int k) : _k(k) {}
        int _k;
    };

    auto to_string(DimValue v) -> std::string;

    struct SolverOptions
    {
        /// Skip subsets that violate the K-end required-vertex constraints.
        bool use_structural_pruning = true;
        /// Declare infinity from structural certificates without exhausting all subsets.
        bool use_infinite_shortcuts = true;
        /// Worker threads per cardinality; results do not depend on it.
        int parallel_shards = 1;
        /// Give up with BudgetExhausted after testing this many subsets.
        std::optional<std::uint64_t> subset_budget;
        int vertex_cap = 20;
        InvariantCaps caps;

        /// No pruning, no shortcuts, one shard: the plain exhaustive scan.
        static auto naive() -> SolverOptions
        {
            SolverOptions o;
            o.use_structural_pruning = false;
            o.use_infinite_shortcuts = false;
            return o;
        }
    };

    struct DimensionResult
    {
        Variant variant = Variant::dim;
        DimValue value = DimValue::infinite();
        /// Present exactly when value is finite.
        std::optional<VertexSet> witness;
        std::optional<std::string> certificate;
        std::uint64_t subsets_checked = 0;
        std::int64_t elapsed_ms = 0;
    };

    /// Exact dimension by cardinality-ordered enumeration. Within a cardinality subsets are
    /// visited in lexicographic order and the first resolving one is the witness.
    auto dimension(const Graph & g, Variant v, const SolverOptions & opts = {}) -> DimensionResult;

    /// Every minimum-cardinality resolving set, in lexicographic order; empty if none exists.
    auto minimum_bases(const Graph & g, Variant v, const SolverOptions & opts = {}) -> std::vector<VertexSet>;

    struct Certificate
    {
        bool valid = false;
        std::vector<Edge> violating;
    };

    /// Throws ValidationError if landmarks is empty or out of range.
    auto certify(const Graph & g, VertexSet landmarks, Variant v) -> Certificate;

    /// "Choose between at_least and at_most vertices of set" for every resolving set.
    struct Constraint
    {
        VertexSet set;
        int at_least = 0;
        int at_most = 0;
        /// The constraint follows from the argument of the K-end results rather than their statement.
        bool derived_from_proof = false;

        auto admits(VertexSet landmarks) const -> bool
        {
            auto c = (landmarks & set).size();
            return c >= at_least && c <= at_most;
        }
    };

    struct RequiredVertices
    {
        std::vector<Constraint> constraints;
        /// For lmd: a clique with three or more K-end vertices, so no resolving set exists.
        std::optional<KEndClique> contradiction;
    };

    /// Only lmd and ldim_ms have K-end constraints; other variants get an empty result.
    auto required_vertices(const Graph & g, Variant v, int clique_cap = InvariantCaps{}.clique) -> RequiredVertices;
}
