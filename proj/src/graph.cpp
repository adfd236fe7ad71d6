#include <multires/graph.hpp>
#include <multires/errors.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace multires
{
    auto VertexSet::of(std::initializer_list<Vertex> vs) -> VertexSet
    {
        return of(std::span<const Vertex>{vs.begin(), vs.size()});
    }

    auto VertexSet::of(std::span<const Vertex> vs) -> VertexSet
    {
        VertexSet s;
        for (auto v : vs) {
            if (v < 0 || v >= max_vertices)
                throw ValidationError("vertex id " + std::to_string(v) + " out of range");
            s.insert(v);
        }
        return s;
    }

    auto VertexSet::to_vector() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        result.reserve(size());
        for (auto bits = _bits; bits; bits &= bits - 1)
            result.push_back(std::countr_zero(bits));
        return result;
    }

    auto lex_less(VertexSet a, VertexSet b) -> bool
    {
        auto x = a.to_vector(), y = b.to_vector();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }

    auto to_string(VertexSet s) -> std::string
    {
        std::string result = "{";
        bool first = true;
        for (auto v : s.to_vector()) {
            if (! first)
                result += ",";
            result += std::to_string(v);
            first = false;
        }
        return result + "}";
    }

    Graph::Graph(int n)
    {
        if (n < 0 || n > max_vertices)
            throw ValidationError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(max_vertices));
        _adj.resize(n);
    }

    auto Graph::from_edges(int n, std::span<const Edge> edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto Graph::size() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto & a : _adj)
            twice += a.size();
        return twice / 2;
    }

    void Graph::add_edge(Vertex u, Vertex v)
    {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} names a vertex outside 0.." + std::to_string(order() - 1));
        if (u == v)
            throw ValidationError("loop edge at vertex " + std::to_string(u));
        _adj[u].insert(v);
        _adj[v].insert(u);
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Vertex u = 0; u < order(); ++u)
            for (auto v : _adj[u].to_vector())
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    namespace
    {
        auto reachable_from(const Graph & g, Vertex s) -> VertexSet
        {
            VertexSet seen, frontier;
            seen.insert(s);
            frontier.insert(s);
            while (! frontier.empty()) {
                VertexSet next;
                for (auto u : frontier.to_vector())
                    next = next | g.neighbours(u);
                frontier = next - seen;
                seen = seen | frontier;
            }
            return seen;
        }
    }

    auto Graph::connected() const -> bool
    {
        return order() == 0 || reachable_from(*this, 0) == vertices();
    }

    auto Graph::induced(VertexSet keep, std::vector<Vertex> * mapping) const -> Graph
    {
        auto kept = (keep & vertices()).to_vector();
        std::vector<int> index(order(), -1);
        for (std::size_t i = 0; i < kept.size(); ++i)
            index[kept[i]] = static_cast<int>(i);

        Graph h(static_cast<int>(kept.size()));
        for (auto [u, v] : edges())
            if (index[u] >= 0 && index[v] >= 0)
                h.add_edge(index[u], index[v]);
        if (mapping)
            *mapping = std::move(kept);
        return h;
    }

    void require_connected(const Graph & g)
    {
        if (g.order() == 0)
            throw ValidationError("graph has no vertices");
        auto seen = reachable_from(g, 0);
        if (seen != g.vertices())
            throw ConnectivityError(0, (g.vertices() - seen).to_vector().front());
    }

    auto is_regular(const Graph & g) -> bool
    {
        for (Vertex v = 1; v < g.order(); ++v)
            if (g.degree(v) != g.degree(0))
                return false;
        return true;
    }

    DistMatrix::DistMatrix(const Graph & g) :
        _n(g.order()),
        _d(static_cast<std::size_t>(g.order()) * g.order(), std::numeric_limits<std::uint8_t>::max())
    {
        require_connected(g);

        std::vector<Vertex> queue(_n);
        for (Vertex s = 0; s < _n; ++s) {
            auto * dist = _d.data() + static_cast<std::size_t>(s) * _n;
            std::size_t head = 0, tail = 0;
            dist[s] = 0;
            queue[tail++] = s;
            while (head < tail) {
                auto u = queue[head++];
                for (auto v : g.neighbours(u).to_vector())
                    if (dist[v] == std::numeric_limits<std::uint8_t>::max()) {
                        dist[v] = dist[u] + 1;
                        queue[tail++] = v;
                    }
            }
            for (Vertex v = 0; v < _n; ++v)
                _diameter = std::max<int>(_diameter, dist[v]);
        }
    }

    auto DistMatrix::eccentricity(Vertex u) const -> int
    {
        auto r = row(u);
        return *std::max_element(r.begin(), r.end());
    }
}
