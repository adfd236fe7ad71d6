#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace multires
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Vertex sets are bitmasks, so graphs are limited to this many vertices.
    inline constexpr int max_vertices = 64;

    class VertexSet
    {
    public:
        constexpr VertexSet() = default;
        constexpr explicit VertexSet(std::uint64_t bits) : _bits(bits) {}

        static auto of(std::initializer_list<Vertex> vs) -> VertexSet;
        static auto of(std::span<const Vertex> vs) -> VertexSet;

        /// {0, 1, ..., n-1}
        static constexpr auto first_n(int n) -> VertexSet
        {
            return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
        }

        constexpr auto bits() const -> std::uint64_t { return _bits; }
        constexpr auto contains(Vertex v) const -> bool { return (_bits >> v) & 1u; }
        constexpr auto size() const -> int { return std::popcount(_bits); }
        constexpr auto empty() const -> bool { return _bits == 0; }
        constexpr void insert(Vertex v) { _bits |= std::uint64_t{1} << v; }
        constexpr void erase(Vertex v) { _bits &= ~(std::uint64_t{1} << v); }

        /// Members in ascending order.
        auto to_vector() const -> std::vector<Vertex>;

        constexpr auto operator== (const VertexSet &) const -> bool = default;

        friend constexpr auto operator& (VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & b._bits}; }
        friend constexpr auto operator| (VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits | b._bits}; }
        friend constexpr auto operator- (VertexSet a, VertexSet b) -> VertexSet { return VertexSet{a._bits & ~b._bits}; }

    private:
        std::uint64_t _bits = 0;
    };

    /// Lexicographic order on the ascending member lists.
    auto lex_less(VertexSet a, VertexSet b) -> bool;

    auto to_string(VertexSet s) -> std::string;

    /// Simple undirected graph on vertices 0..n-1.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);

        static auto from_edges(int n, std::span<const Edge> edges) -> Graph;

        auto order() const -> int { return static_cast<int>(_adj.size()); }
        auto size() const -> std::size_t;

        /// Adds {u, v}; repeated edges are ignored. Throws ValidationError on loops or bad ids.
        void add_edge(Vertex u, Vertex v);

        auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].contains(v); }
        auto neighbours(Vertex u) const -> VertexSet { return _adj[u]; }
        auto degree(Vertex u) const -> int { return _adj[u].size(); }
        auto vertices() const -> VertexSet { return VertexSet::first_n(order()); }

        /// Edges as (u, v) with u < v, sorted.
        auto edges() const -> std::vector<Edge>;

        auto connected() const -> bool;

        /// Subgraph induced by keep, relabelled 0..|keep|-1 in ascending order of original id.
        /// If mapping is given it receives the original id of every new vertex.
        auto induced(VertexSet keep, std::vector<Vertex> * mapping = nullptr) const -> Graph;

        auto operator== (const Graph &) const -> bool = default;

    private:
        std::vector<VertexSet> _adj;
    };

    /// Throws ConnectivityError naming two mutually unreachable vertices.
    void require_connected(const Graph & g);

    /// All-pairs hop distances of a connected graph; immutable.
    class DistMatrix
    {
    public:
        /// BFS from every vertex. Throws ConnectivityError if g is disconnected.
        explicit DistMatrix(const Graph & g);

        auto order() const -> int { return _n; }
        auto operator() (Vertex u, Vertex v) const -> int { return _d[static_cast<std::size_t>(u) * _n + v]; }
        auto row(Vertex u) const -> std::span<const std::uint8_t>
        {
            return {_d.data() + static_cast<std::size_t>(u) * _n, static_cast<std::size_t>(_n)};
        }
        auto diameter() const -> int { return _diameter; }
        auto eccentricity(Vertex u) const -> int;

    private:
        int _n = 0;
        int _diameter = 0;
        std::vector<std::uint8_t> _d;
    };

    inline auto all_pairs_distances(const Graph & g) -> DistMatrix { return DistMatrix{g}; }

    // ---- ingestion ---------------------------------------------------------

    /// One "u v" pair per line, 0-based; blank lines and '#' comments are skipped.
    auto parse_edge_list(std::string_view text) -> Graph;
    auto to_edge_list(const Graph & g) -> std::string;

    auto parse_graph6(std::string_view line) -> Graph;
    auto to_graph6(const Graph & g) -> std::string;

    // ---- classical invariants ----------------------------------------------

    /// Vertex caps for the exponential exact invariants.
    struct InvariantCaps
    {
        int clique = 20;
        int chromatic = 16;
    };

    struct GraphInvariants
    {
        int diameter = 0;
        int omega = 0;
        int chi = 0;
        bool bipartite = false;
        /// Colour (0 or 1) per vertex; empty unless bipartite.
        std::vector<int> two_colouring;
    };

    auto invariants(const Graph & g, const DistMatrix & dm, InvariantCaps caps = {}) -> GraphInvariants;

    /// BFS 2-colouring, or nullopt if an odd cycle exists.
    auto two_colouring(const Graph & g) -> std::optional<std::vector<int>>;

    /// Maximal cliques by pivoting Bron-Kerbosch, in lexicographic order.
    auto maximal_cliques(const Graph & g, int cap = InvariantCaps{}.clique) -> std::vector<VertexSet>;
    auto clique_number(const Graph & g, int cap = InvariantCaps{}.clique) -> int;
    auto chromatic_number(const Graph & g, int cap = InvariantCaps{}.chromatic) -> int;

    /// Layers N_0..N_e(w) of vertices at distance i from w.
    auto distance_layers(const DistMatrix & dm, Vertex w) -> std::vector<VertexSet>;

    /// Maximal leafless subgraph, by repeatedly deleting degree-1 vertices.
    /// nullopt when g is a tree.
    auto two_core(const Graph & g) -> std::optional<VertexSet>;

    auto is_regular(const Graph & g) -> bool;

    /// A maximal clique of order >= 3 together with its members whose degree is |clique| - 1.
    struct KEndClique
    {
        VertexSet clique;
        VertexSet ends;
    };

    auto k_end_structure(const Graph & g, int cap = InvariantCaps{}.clique) -> std::vector<KEndClique>;
}
