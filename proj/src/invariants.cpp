#include <multires/graph.hpp>
#include <multires/errors.hpp>

#include <algorithm>

namespace multires
{
    namespace
    {
        void check_cap(const Graph & g, int cap, const char * what)
        {
            if (g.order() > cap)
                throw CapExceeded("exact invariant cap exceeded: " + std::string(what) + " is capped at "
                        + std::to_string(cap) + " vertices, graph has " + std::to_string(g.order()));
        }

        void bron_kerbosch(const Graph & g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet> & out)
        {
            if (p.empty() && x.empty()) {
                out.push_back(r);
                return;
            }

            // pivot: vertex of p | x with the most neighbours in p
            Vertex pivot = -1;
            int best = -1;
            for (auto u : (p | x).to_vector()) {
                auto c = (g.neighbours(u) & p).size();
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }

            for (auto v : (p - g.neighbours(pivot)).to_vector()) {
                auto r2 = r;
                r2.insert(v);
                bron_kerbosch(g, r2, p & g.neighbours(v), x & g.neighbours(v), out);
                p.erase(v);
                x.insert(v);
            }
        }

        struct Colourer
        {
            const Graph & g;
            int colours;
            std::vector<int> colour;

            auto saturation(Vertex v) const -> int
            {
                std::uint64_t used = 0;
                for (auto u : g.neighbours(v).to_vector())
                    if (colour[u] >= 0)
                        used |= std::uint64_t{1} << colour[u];
                return std::popcount(used);
            }

            // DSATUR-ordered backtracking; opening at most one new colour per step breaks symmetry.
            auto extend(int coloured, int in_use) -> bool
            {
                if (coloured == g.order())
                    return true;

                Vertex pick = -1;
                int best_sat = -1, best_deg = -1;
                for (Vertex v = 0; v < g.order(); ++v) {
                    if (colour[v] >= 0)
                        continue;
                    auto s = saturation(v);
                    if (s > best_sat || (s == best_sat && g.degree(v) > best_deg)) {
                        pick = v;
                        best_sat = s;
                        best_deg = g.degree(v);
                    }
                }

                for (int c = 0; c < std::min(colours, in_use + 1); ++c) {
                    bool clash = false;
                    for (auto u : g.neighbours(pick).to_vector())
                        if (colour[u] == c) {
                            clash = true;
                            break;
                        }
                    if (clash)
                        continue;
                    colour[pick] = c;
                    if (extend(coloured + 1, std::max(in_use, c + 1)))
                        return true;
                    colour[pick] = -1;
                }
                return false;
            }
        };
    }

    auto maximal_cliques(const Graph & g, int cap) -> std::vector<VertexSet>
    {
        check_cap(g, cap, "clique enumeration");
        std::vector<VertexSet> out;
        if (g.order() > 0)
            bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, out);
        std::sort(out.begin(), out.end(), lex_less);
        return out;
    }

    auto clique_number(const Graph & g, int cap) -> int
    {
        int best = 0;
        for (auto c : maximal_cliques(g, cap))
            best = std::max(best, c.size());
        return best;
    }

    auto chromatic_number(const Graph & g, int cap) -> int
    {
        check_cap(g, cap, "chromatic number");
        if (g.order() == 0)
            return 0;
        for (int k = std::max(1, clique_number(g, std::max(cap, g.order()))); ; ++k) {
            Colourer c{g, k, std::vector<int>(g.order(), -1)};
            if (c.extend(0, 0))
                return k;
        }
    }

    auto two_colouring(const Graph & g) -> std::optional<std::vector<int>>
    {
        std::vector<int> colour(g.order(), -1);
        std::vector<Vertex> queue;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (colour[s] >= 0)
                continue;
            colour[s] = 0;
            queue.assign(1, s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                auto u = queue[head];
                for (auto v : g.neighbours(u).to_vector()) {
                    if (colour[v] < 0) {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    }
                    else if (colour[v] == colour[u])
                        return std::nullopt;
                }
            }
        }
        return colour;
    }

    auto invariants(const Graph & g, const DistMatrix & dm, InvariantCaps caps) -> GraphInvariants
    {
        GraphInvariants result;
        result.diameter = dm.diameter();
        result.omega = clique_number(g, caps.clique);
        result.chi = chromatic_number(g, caps.chromatic);
        if (auto c = two_colouring(g)) {
            result.bipartite = true;
            result.two_colouring = std::move(*c);
        }
        return result;
    }

    auto distance_layers(const DistMatrix & dm, Vertex w) -> std::vector<VertexSet>
    {
        if (w < 0 || w >= dm.order())
            throw ValidationError("vertex " + std::to_string(w) + " out of range");
        std::vector<VertexSet> layers(dm.eccentricity(w) + 1);
        for (Vertex u = 0; u < dm.order(); ++u)
            layers[dm(w, u)].insert(u);
        return layers;
    }

    auto two_core(const Graph & g) -> std::optional<VertexSet>
    {
        auto alive = g.vertices();
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto v : alive.to_vector())
                if ((g.neighbours(v) & alive).size() <= 1) {
                    alive.erase(v);
                    changed = true;
                }
        }
        if (alive.empty())
            return std::nullopt;
        return alive;
    }

    auto k_end_structure(const Graph & g, int cap) -> std::vector<KEndClique>
    {
        std::vector<KEndClique> result;
        for (auto clique : maximal_cliques(g, cap)) {
            auto r = clique.size();
            if (r < 3)
                continue;
            KEndClique k{clique, VertexSet{}};
            for (auto v : clique.to_vector())
                if (g.degree(v) == r - 1)
                    k.ends.insert(v);
            result.push_back(k);
        }
        return result;
    }
}
