#include <multires/generators.hpp>
#include <multires/errors.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

namespace multires
{
    namespace
    {
        void require(bool ok, const std::string & what)
        {
            if (! ok)
                throw ValidationError(what);
        }

        auto parse_int(std::string_view s, std::string_view context) -> int
        {
            int v = 0;
            auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || end != s.data() + s.size())
                throw ValidationError("family spec '" + std::string(context) + "': expected an integer, got '" + std::string(s) + "'");
            return v;
        }

        auto parse_int_list(std::string_view s, std::string_view context) -> std::vector<int>
        {
            std::vector<int> out;
            while (true) {
                auto comma = s.find(',');
                out.push_back(parse_int(s.substr(0, comma), context));
                if (comma == std::string_view::npos)
                    break;
                s.remove_prefix(comma + 1);
            }
            return out;
        }

        auto join_ints(const std::vector<int> & xs, char sep = ',') -> std::string
        {
            std::string out;
            for (std::size_t i = 0; i < xs.size(); ++i)
                out += (i ? std::string(1, sep) : "") + std::to_string(xs[i]);
            return out;
        }

        void check_order(long n)
        {
            require(n <= max_vertices, "generated graph would have " + std::to_string(n) + " vertices; limit is " + std::to_string(max_vertices));
        }

        auto order_of(const FamilySpec & spec) -> long;
    }

    auto family_name(Family f) -> std::string_view
    {
        switch (f) {
            case Family::path: return "path";
            case Family::cycle: return "cycle";
            case Family::complete: return "complete";
            case Family::star: return "star";
            case Family::wheel: return "wheel";
            case Family::amal: return "amal";
            case Family::edge_amal: return "edge_amal";
            case Family::corona: return "corona";
            case Family::join: return "join";
            case Family::unicyclic: return "unicyclic";
            case Family::clique_gadget: return "gadget";
        }
        return "?";
    }

    auto parse_family_spec(std::string_view text) -> FamilySpec
    {
        auto colon = text.find(':');
        require(colon != std::string_view::npos, "family spec '" + std::string(text) + "' must look like name:params");
        auto name = text.substr(0, colon);
        auto rest = text.substr(colon + 1);

        FamilySpec spec;
        static constexpr Family simple[] = {Family::path, Family::cycle, Family::complete, Family::star, Family::wheel,
            Family::amal, Family::edge_amal, Family::clique_gadget};
        for (auto f : simple)
            if (name == family_name(f) || (f == Family::clique_gadget && name == "clique_gadget")) {
                spec.family = f;
                spec.params = parse_int_list(rest, text);
                validate(spec);
                return spec;
            }

        if (name == "corona") {
            auto slash = rest.rfind('/');
            require(slash != std::string_view::npos, "corona spec needs base/m1,m2,...: '" + std::string(text) + "'");
            spec.family = Family::corona;
            spec.operands.push_back(parse_family_spec(rest.substr(0, slash)));
            spec.params = parse_int_list(rest.substr(slash + 1), text);
        }
        else if (name == "join") {
            auto plus = rest.find('+');
            require(plus != std::string_view::npos, "join spec needs A+B: '" + std::string(text) + "'");
            spec.family = Family::join;
            spec.operands.push_back(parse_family_spec(rest.substr(0, plus)));
            spec.operands.push_back(parse_family_spec(rest.substr(plus + 1)));
        }
        else if (name == "unicyclic") {
            spec.family = Family::unicyclic;
            auto slash = rest.find('/');
            spec.params.push_back(parse_int(rest.substr(0, slash), text));
            while (slash != std::string_view::npos) {
                rest.remove_prefix(slash + 1);
                slash = rest.find('/');
                auto item = rest.substr(0, slash);
                auto c = item.find(':');
                require(c != std::string_view::npos, "unicyclic attachment must be vertex:parents, got '" + std::string(item) + "'");
                spec.trees.push_back(TreeAttachment{parse_int(item.substr(0, c), text), parse_int_list(item.substr(c + 1), text)});
            }
        }
        else
            throw ValidationError("unknown graph family '" + std::string(name) + "'");

        validate(spec);
        return spec;
    }

    auto to_string(const FamilySpec & spec) -> std::string
    {
        auto head = std::string(family_name(spec.family)) + ":";
        switch (spec.family) {
            case Family::corona: return head + to_string(spec.operands.at(0)) + "/" + join_ints(spec.params);
            case Family::join: return head + to_string(spec.operands.at(0)) + "+" + to_string(spec.operands.at(1));
            case Family::unicyclic: {
                auto out = head + std::to_string(spec.params.at(0));
                for (auto & t : spec.trees)
                    out += "/" + std::to_string(t.cycle_vertex) + ":" + join_ints(t.parents);
                return out;
            }
            default: return head + join_ints(spec.params);
        }
    }

    void validate(const FamilySpec & spec)
    {
        auto & p = spec.params;
        auto name = std::string(family_name(spec.family));
        auto single = [&] (int lo, const char * what) {
            require(p.size() == 1, name + " takes exactly one parameter");
            require(p[0] >= lo, name + " needs " + what + " >= " + std::to_string(lo) + ", got " + std::to_string(p[0]));
        };

        switch (spec.family) {
            case Family::path: single(1, "n"); break;
            case Family::cycle: single(3, "n"); break;
            case Family::complete: single(1, "n"); break;
            case Family::star: single(1, "leaf count"); break;
            case Family::wheel: single(3, "rim length n"); break;
            case Family::clique_gadget: single(2, "clique order n"); break;
            case Family::amal:
            case Family::edge_amal: {
                auto lo = spec.family == Family::amal ? 1 : 2;
                require(p.size() >= 2, name + " needs m >= 2 cliques, got " + std::to_string(p.size()));
                for (auto x : p)
                    require(x >= lo, name + " needs every clique order n_i >= " + std::to_string(lo) + ", got " + std::to_string(x));
                break;
            }
            case Family::corona: {
                require(spec.operands.size() == 1, "corona needs one base graph");
                validate(spec.operands[0]);
                auto base = order_of(spec.operands[0]);
                require(static_cast<long>(p.size()) == base, "corona needs one clique order per base vertex: base has "
                        + std::to_string(base) + " vertices, got " + std::to_string(p.size()) + " orders");
                for (auto x : p)
                    require(x >= 1, "corona needs every m_i >= 1, got " + std::to_string(x));
                break;
            }
            case Family::join:
                require(spec.operands.size() == 2, "join needs two operands");
                validate(spec.operands[0]);
                validate(spec.operands[1]);
                break;
            case Family::unicyclic: {
                require(p.size() == 1 && p[0] >= 3, "unicyclic needs a cycle length >= 3");
                for (auto & t : spec.trees) {
                    require(t.cycle_vertex >= 0 && t.cycle_vertex < p[0], "unicyclic attachment vertex " + std::to_string(t.cycle_vertex) + " is not on the cycle");
                    require(! t.parents.empty(), "unicyclic attachment needs at least one tree vertex");
                    for (std::size_t i = 0; i < t.parents.size(); ++i)
                        require(t.parents[i] >= 0 && t.parents[i] <= static_cast<int>(i),
                                "unicyclic tree parent of node " + std::to_string(i + 1) + " must lie in 0.." + std::to_string(i));
                }
                break;
            }
        }
        check_order(order_of(spec));
    }

    namespace
    {
        auto order_of(const FamilySpec & spec) -> long
        {
            auto & p = spec.params;
            auto sum = [&] (int drop) {
                long s = 0;
                for (auto x : p)
                    s += x - drop;
                return s;
            };
            switch (spec.family) {
                case Family::path:
                case Family::cycle:
                case Family::complete: return p.at(0);
                case Family::star:
                case Family::wheel: return p.at(0) + 1L;
                case Family::amal: return 1 + sum(1);
                case Family::edge_amal: return 2 + sum(2);
                case Family::corona: return order_of(spec.operands.at(0)) + sum(0);
                case Family::join: return order_of(spec.operands.at(0)) + order_of(spec.operands.at(1));
                case Family::unicyclic: {
                    long n = p.at(0);
                    for (auto & t : spec.trees)
                        n += static_cast<long>(t.parents.size());
                    return n;
                }
                case Family::clique_gadget: {
                    long k = 0;
                    while ((1L << k) < p.at(0))
                        ++k;
                    return p.at(0) == 2 ? 2 : p.at(0) + k * (k + 1);
                }
            }
            return 0;
        }
    }

    auto path_graph(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i)
            g.add_edge(i, i + 1);
        return g;
    }

    auto cycle_graph(int n) -> Graph
    {
        require(n >= 3, "cycle needs n >= 3");
        auto g = path_graph(n);
        g.add_edge(n - 1, 0);
        return g;
    }

    auto complete_graph(int n) -> Graph
    {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                g.add_edge(i, j);
        return g;
    }

    auto star_graph(int leaves) -> Graph
    {
        Graph g(leaves + 1);
        for (int i = 1; i <= leaves; ++i)
            g.add_edge(0, i);
        return g;
    }

    auto wheel_graph(int rim) -> Graph
    {
        require(rim >= 3, "wheel needs rim length n >= 3");
        Graph g(rim + 1);
        for (int i = 0; i < rim; ++i) {
            g.add_edge(i, (i + 1) % rim);
            g.add_edge(i, rim);
        }
        return g;
    }

    namespace
    {
        // Glue cliques along the shared vertices 0..shared-1.
        auto glue_cliques(const std::vector<int> & orders, int shared) -> Graph
        {
            long n = shared;
            for (auto x : orders)
                n += x - shared;
            check_order(n);
            Graph g(static_cast<int>(n));
            int next = shared;
            for (auto x : orders) {
                std::vector<Vertex> members(shared);
                std::iota(members.begin(), members.end(), 0);
                for (int i = shared; i < x; ++i)
                    members.push_back(next++);
                for (std::size_t a = 0; a < members.size(); ++a)
                    for (std::size_t b = a + 1; b < members.size(); ++b)
                        g.add_edge(members[a], members[b]);
            }
            return g;
        }
    }

    auto amalgamation(const std::vector<int> & clique_orders) -> Graph
    {
        FamilySpec spec{Family::amal, clique_orders, {}, {}};
        validate(spec);
        return glue_cliques(clique_orders, 1);
    }

    auto edge_amalgamation(const std::vector<int> & clique_orders) -> Graph
    {
        FamilySpec spec{Family::edge_amal, clique_orders, {}, {}};
        validate(spec);
        return glue_cliques(clique_orders, 2);
    }

    auto corona(const Graph & base, const std::vector<int> & clique_orders) -> Graph
    {
        require(static_cast<int>(clique_orders.size()) == base.order(), "corona needs one clique order per base vertex");
        long n = base.order();
        for (auto m : clique_orders) {
            require(m >= 1, "corona needs every m_i >= 1");
            n += m;
        }
        check_order(n);

        Graph g(static_cast<int>(n));
        for (auto [u, v] : base.edges())
            g.add_edge(u, v);
        int next = base.order();
        for (int i = 0; i < base.order(); ++i) {
            auto first = next;
            for (int a = 0; a < clique_orders[i]; ++a, ++next) {
                g.add_edge(i, next);
                for (int b = first; b < next; ++b)
                    g.add_edge(b, next);
            }
        }
        return g;
    }

    auto join(const Graph & a, const Graph & b) -> Graph
    {
        check_order(static_cast<long>(a.order()) + b.order());
        Graph g(a.order() + b.order());
        for (auto [u, v] : a.edges())
            g.add_edge(u, v);
        for (auto [u, v] : b.edges())
            g.add_edge(a.order() + u, a.order() + v);
        for (int u = 0; u < a.order(); ++u)
            for (int v = 0; v < b.order(); ++v)
                g.add_edge(u, a.order() + v);
        return g;
    }

    auto unicyclic(int cycle_length, const std::vector<TreeAttachment> & trees) -> Graph
    {
        FamilySpec spec{Family::unicyclic, {cycle_length}, {}, trees};
        validate(spec);
        Graph g(static_cast<int>(order_of(spec)));
        for (int i = 0; i < cycle_length; ++i)
            g.add_edge(i, (i + 1) % cycle_length);
        int next = cycle_length;
        for (auto & t : trees) {
            std::vector<Vertex> id{t.cycle_vertex};
            for (auto parent : t.parents) {
                g.add_edge(id[parent], next);
                id.push_back(next++);
            }
        }
        return g;
    }

    auto gen_clique_gadget(int n) -> CliqueGadget
    {
        require(n >= 2, "clique gadget needs n >= 2, got " + std::to_string(n));
        CliqueGadget result;

        if (n == 2) {
            result.graph = complete_graph(2);
            result.landmarks = VertexSet::of({0});
            result.k = 1;
            result.clique = VertexSet::of({0, 1});
            result.labels = {{2}, {2}};
            result.v_index = {-1, 0};
            return result;
        }

        int k = 0;
        while ((1 << k) < n)
            ++k;
        result.k = k;
        auto full = 1 << k;
        check_order(n + static_cast<long>(k) * (k + 1));

        // label bit j set <=> coordinate j is odd (2j+1); bit k-1-j keeps lexicographic order
        auto to_label = [k] (int bits) {
            std::vector<int> label(k);
            for (int j = 1; j <= k; ++j)
                label[j - 1] = 2 * j + ((bits >> (k - j)) & 1);
            return label;
        };
        auto all_odd = full - 1;
        auto single_even = [&] (int j) { return all_odd & ~(1 << (k - j)); };

        std::vector<int> mixed;
        for (int bits = 1; bits < all_odd; ++bits) {
            bool reserved = false;
            for (int j = 1; j <= k; ++j)
                reserved = reserved || bits == single_even(j);
            if (! reserved)
                mixed.push_back(bits);
        }

        // v_0 all-even, v_1..v_{2^k-k-2} mixed, v_{2^k-k-1} all-odd
        std::vector<int> v_bits{0};
        v_bits.insert(v_bits.end(), mixed.begin(), mixed.end());
        v_bits.push_back(all_odd);

        auto dropped = full - n;
        std::vector<int> kept_v;
        for (int i = 0; i < static_cast<int>(v_bits.size()); ++i)
            if (i == 0 || i > dropped)
                kept_v.push_back(i);

        auto clique_size = k + static_cast<int>(kept_v.size());
        auto total = clique_size + k * (k + 1);
        Graph g(total);
        result.labels.assign(total, {});
        result.v_index.assign(total, -1);

        for (int a = 0; a < clique_size; ++a) {
            result.clique.insert(a);
            for (int b = a + 1; b < clique_size; ++b)
                g.add_edge(a, b);
        }
        for (int j = 1; j <= k; ++j)
            result.labels[j - 1] = to_label(single_even(j));
        for (std::size_t i = 0; i < kept_v.size(); ++i) {
            auto id = k + static_cast<int>(i);
            result.labels[id] = to_label(v_bits[kept_v[i]]);
            result.v_index[id] = kept_v[i];
        }

        // paths u_j, u_{j,1}, ..., u_{j,2j}
        int next = clique_size;
        std::vector<Vertex> path_start(k + 1);
        for (int j = 1; j <= k; ++j) {
            path_start[j] = next;
            Vertex prev = j - 1;
            for (int step = 1; step <= 2 * j; ++step, ++next) {
                g.add_edge(prev, next);
                prev = next;
            }
            result.landmarks.insert(prev);
        }

        for (int id = k; id < clique_size; ++id)
            for (int j = 1; j <= k; ++j)
                if (result.labels[id][j - 1] == 2 * j)
                    g.add_edge(id, path_start[j]);

        result.graph = std::move(g);
        return result;
    }

    auto gen(const FamilySpec & spec) -> Graph
    {
        validate(spec);
        auto & p = spec.params;
        switch (spec.family) {
            case Family::path: return path_graph(p[0]);
            case Family::cycle: return cycle_graph(p[0]);
            case Family::complete: return complete_graph(p[0]);
            case Family::star: return star_graph(p[0]);
            case Family::wheel: return wheel_graph(p[0]);
            case Family::amal: return amalgamation(p);
            case Family::edge_amal: return edge_amalgamation(p);
            case Family::corona: return corona(gen(spec.operands[0]), p);
            case Family::join: return join(gen(spec.operands[0]), gen(spec.operands[1]));
            case Family::unicyclic: return unicyclic(p[0], spec.trees);
            case Family::clique_gadget: return gen_clique_gadget(p[0]).graph;
        }
        throw ValidationError("unhandled family");
    }

    ConnectedGraphs::ConnectedGraphs(int n) :
        _n(n)
    {
        require(n >= 1, "connected-graph enumeration needs n >= 1, got " + std::to_string(n));
        if (n > 7)
            throw CapExceeded("connected-graph enumeration supports n <= 7, got " + std::to_string(n));
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                _slots.emplace_back(i, j);
        _end = std::uint64_t{1} << _slots.size();
    }

    auto ConnectedGraphs::next() -> std::optional<Graph>
    {
        while (_mask < _end) {
            auto bits = _mask++;
            Graph g(_n);
            for (std::size_t s = 0; s < _slots.size(); ++s)
                if ((bits >> s) & 1)
                    g.add_edge(_slots[s].first, _slots[s].second);
            if (g.connected())
                return g;
        }
        return std::nullopt;
    }
}
