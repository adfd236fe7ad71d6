#include <multires/multiset.hpp>
#include <multires/errors.hpp>

#include <algorithm>
#include <map>

namespace multires
{
    auto to_string(Variant v) -> std::string_view
    {
        switch (v) {
            case Variant::dim: return "dim";
            case Variant::ldim: return "ldim";
            case Variant::md: return "md";
            case Variant::dim_ms: return "dim_ms";
            case Variant::lmd: return "lmd";
            case Variant::ldim_ms: return "ldim_ms";
        }
        return "?";
    }

    auto parse_variant(std::string_view name) -> std::optional<Variant>
    {
        for (auto v : all_variants)
            if (to_string(v) == name)
                return v;
        return std::nullopt;
    }

    Multiset::Multiset(std::vector<int> values) :
        _values(std::move(values))
    {
        std::sort(_values.begin(), _values.end());
    }

    auto to_string(const Multiset & m) -> std::string
    {
        std::string out = "{";
        for (std::size_t i = 0; i < m.values().size(); ++i)
            out += (i ? "," : "") + std::to_string(m.values()[i]);
        return out + "}";
    }

    namespace
    {
        void check_landmarks(const DistMatrix & dm, VertexSet landmarks)
        {
            if (landmarks.empty())
                throw ValidationError("landmark set must be non-empty");
            if (! (landmarks - VertexSet::first_n(dm.order())).empty())
                throw ValidationError("landmark set " + to_string(landmarks) + " names a vertex outside the graph");
        }
    }

    auto representation(const DistMatrix & dm, Vertex u, VertexSet landmarks) -> Representation
    {
        check_landmarks(dm, landmarks);
        Representation r;
        for (auto w : landmarks.to_vector())
            r.distances.push_back(dm(u, w));
        return r;
    }

    auto representation_multiset(const DistMatrix & dm, Vertex u, VertexSet landmarks) -> Multiset
    {
        return Multiset{representation(dm, u, landmarks).distances};
    }

    auto pairs_in_scope(const Graph & g, VertexSet landmarks, Variant v) -> std::vector<Edge>
    {
        std::vector<Edge> pairs;
        auto scope = scope_of(v);
        bool outside_only = scope == PairScope::pairs_outside || scope == PairScope::adjacent_pairs_outside;
        bool adjacent_only = scope == PairScope::adjacent_pairs || scope == PairScope::adjacent_pairs_outside;

        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b) {
                if (adjacent_only && ! g.adjacent(a, b))
                    continue;
                if (outside_only && (landmarks.contains(a) || landmarks.contains(b)))
                    continue;
                pairs.emplace_back(a, b);
            }
        return pairs;
    }

    auto violating_pairs(const DistMatrix & dm, const Graph & g, VertexSet landmarks, Variant v) -> std::vector<Edge>
    {
        check_landmarks(dm, landmarks);
        std::vector<Edge> result;
        for (auto [a, b] : pairs_in_scope(g, landmarks, v)) {
            bool same = kind_of(v) == RepresentationKind::vector
                ? representation(dm, a, landmarks) == representation(dm, b, landmarks)
                : representation_multiset(dm, a, landmarks) == representation_multiset(dm, b, landmarks);
            if (same)
                result.emplace_back(a, b);
        }
        return result;
    }

    auto is_resolving(const DistMatrix & dm, const Graph & g, VertexSet landmarks, Variant v) -> bool
    {
        check_landmarks(dm, landmarks);
        auto scope = scope_of(v);
        if (scope == PairScope::adjacent_pairs || scope == PairScope::adjacent_pairs_outside)
            return violating_pairs(dm, g, landmarks, v).empty();

        // all-pairs scopes: distinct representations across the in-scope vertex set
        auto members = scope == PairScope::pairs_outside ? g.vertices() - landmarks : g.vertices();
        if (kind_of(v) == RepresentationKind::vector) {
            std::vector<Representation> seen;
            for (auto u : members.to_vector())
                seen.push_back(representation(dm, u, landmarks));
            std::sort(seen.begin(), seen.end());
            return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
        }
        std::vector<Multiset> seen;
        for (auto u : members.to_vector())
            seen.push_back(representation_multiset(dm, u, landmarks));
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    }

    namespace
    {
        // Largest e with base^e below 2^128.
        auto max_power(unsigned base) -> int
        {
            if (base < 2)
                return max_vertices;
            unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
            unsigned __int128 p = 1;
            int e = 0;
            while (p <= limit / base) {
                p *= base;
                ++e;
            }
            return e;
        }
    }

    Resolver::Resolver(const Graph & g, const DistMatrix & dm) :
        _g(g),
        _dm(dm),
        _edges(g.edges()),
        _keys(g.order()),
        _scratch(g.order())
    {
    }

    // Multiset key: sum over landmarks of (k+1)^d(u,w). Each count is at most k, so the
    // base-(k+1) digits are exact provided (k+1)^(diameter+1) fits.
    auto Resolver::multiset_keys_fit(int k) const -> bool
    {
        return _dm.diameter() + 1 <= max_power(static_cast<unsigned>(k + 1));
    }

    // Vector key: landmark i contributes d(u,w_i) * (diameter+1)^i.
    auto Resolver::vector_keys_fit(int k) const -> bool
    {
        return k <= max_power(static_cast<unsigned>(_dm.diameter() + 1));
    }

    auto Resolver::resolves(VertexSet landmarks, Variant v) -> bool
    {
        auto k = landmarks.size();
        auto kind = kind_of(v);
        if ((kind == RepresentationKind::multiset && ! multiset_keys_fit(k)) || (kind == RepresentationKind::vector && ! vector_keys_fit(k)))
            return is_resolving(_dm, _g, landmarks, v);

        auto base = kind == RepresentationKind::multiset ? static_cast<unsigned>(k + 1) : static_cast<unsigned>(_dm.diameter() + 1);
        auto top = kind == RepresentationKind::multiset ? _dm.diameter() : k - 1;
        _powers.resize(static_cast<std::size_t>(top) + 1);
        _powers[0] = 1;
        for (int i = 1; i <= top; ++i)
            _powers[i] = _powers[i - 1] * base;

        int landmark[max_vertices];
        int count = 0;
        for (auto bits = landmarks.bits(); bits; bits &= bits - 1)
            landmark[count++] = std::countr_zero(bits);

        auto n = _g.order();
        for (Vertex u = 0; u < n; ++u) {
            auto row = _dm.row(u);
            Key key = 0;
            if (kind == RepresentationKind::multiset)
                for (int i = 0; i < count; ++i)
                    key += _powers[row[landmark[i]]];
            else
                for (int i = 0; i < count; ++i)
                    key += row[landmark[i]] * _powers[i];
            _keys[u] = key;
        }

        switch (scope_of(v)) {
            case PairScope::adjacent_pairs:
                for (auto [a, b] : _edges)
                    if (_keys[a] == _keys[b])
                        return false;
                return true;

            case PairScope::adjacent_pairs_outside:
                for (auto [a, b] : _edges)
                    if (_keys[a] == _keys[b] && ! landmarks.contains(a) && ! landmarks.contains(b))
                        return false;
                return true;

            case PairScope::all_pairs:
            case PairScope::pairs_outside: {
                std::size_t m = 0;
                bool outside = scope_of(v) == PairScope::pairs_outside;
                for (Vertex u = 0; u < n; ++u)
                    if (! outside || ! landmarks.contains(u))
                        _scratch[m++] = _keys[u];
                std::sort(_scratch.begin(), _scratch.begin() + m);
                return std::adjacent_find(_scratch.begin(), _scratch.begin() + m) == _scratch.begin() + m;
            }
        }
        return false;
    }
}
