#pragma once

#include <multires/graph.hpp>

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multires
{
    /// The six resolvability notions, each a (representation kind, pair scope) combination.
    enum class Variant
    {
        dim,
        ldim,
        md,
        dim_ms,
        lmd,
        ldim_ms
    };

    inline constexpr std::array<Variant, 6> all_variants = {
        Variant::dim, Variant::ldim, Variant::md, Variant::dim_ms, Variant::lmd, Variant::ldim_ms};

    enum class RepresentationKind
    {
        vector,
        multiset
    };

    enum class PairScope
    {
        all_pairs,
        adjacent_pairs,
        pairs_outside,
        adjacent_pairs_outside
    };

    constexpr auto kind_of(Variant v) -> RepresentationKind
    {
        return v == Variant::dim || v == Variant::ldim ? RepresentationKind::vector : RepresentationKind::multiset;
    }

    constexpr auto scope_of(Variant v) -> PairScope
    {
        switch (v) {
            case Variant::dim:
            case Variant::md: return PairScope::all_pairs;
            case Variant::ldim:
            case Variant::lmd: return PairScope::adjacent_pairs;
            case Variant::dim_ms: return PairScope::pairs_outside;
            case Variant::ldim_ms: return PairScope::adjacent_pairs_outside;
        }
        return PairScope::all_pairs;
    }

    /// Only md and lmd can fail to have any resolving set.
    constexpr auto may_be_infinite(Variant v) -> bool { return v == Variant::md || v == Variant::lmd; }

    auto to_string(Variant v) -> std::string_view;
    auto parse_variant(std::string_view name) -> std::optional<Variant>;

    /// r(u|W): distances to the landmarks in ascending vertex order.
    struct Representation
    {
        std::vector<int> distances;
        auto operator<=> (const Representation &) const = default;
    };

    /// m(u|W): the bag of distances, kept as a sorted vector.
    class Multiset
    {
    public:
        Multiset() = default;
        explicit Multiset(std::vector<int> values);

        auto values() const -> const std::vector<int> & { return _values; }
        auto operator<=> (const Multiset &) const = default;

    private:
        std::vector<int> _values;
    };

    auto to_string(const Multiset & m) -> std::string;

    auto representation(const DistMatrix & dm, Vertex u, VertexSet landmarks) -> Representation;

    /// Throws ValidationError when landmarks is empty.
    auto representation_multiset(const DistMatrix & dm, Vertex u, VertexSet landmarks) -> Multiset;

    /// Pairs the variant must tell apart, each as (u, v) with u < v in ascending order.
    auto pairs_in_scope(const Graph & g, VertexSet landmarks, Variant v) -> std::vector<Edge>;

    auto is_resolving(const DistMatrix & dm, const Graph & g, VertexSet landmarks, Variant v) -> bool;

    /// Every in-scope pair with equal representations; empty exactly when landmarks resolve.
    auto violating_pairs(const DistMatrix & dm, const Graph & g, VertexSet landmarks, Variant v) -> std::vector<Edge>;

    /// Allocation-free resolvability test for the solver's inner loop. Encodes each
    /// representation as an exact 128-bit positional key when it fits and falls back
    /// to is_resolving otherwise. Not thread-safe; use one per worker.
    class Resolver
    {
    public:
        Resolver(const Graph & g, const DistMatrix & dm);

        auto resolves(VertexSet landmarks, Variant v) -> bool;

    private:
        using Key = unsigned __int128;

        auto multiset_keys_fit(int k) const -> bool;
        auto vector_keys_fit(int k) const -> bool;

        const Graph & _g;
        const DistMatrix & _dm;
        std::vector<Edge> _edges;
        std::vector<Key> _keys;
        std::vector<Key> _scratch;
        std::vector<Key> _powers;
    };
}
