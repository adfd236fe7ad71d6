#pragma once

#include <multires/graph.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multires
{
    /*
     * Vertex labelling of the generated families:
     *
     *   path:n          0 - 1 - ... - (n-1)
     *   cycle:n         rim 0..n-1 in cyclic order
     *   complete:n      0..n-1
     *   star:n          centre 0, leaves 1..n
     *   wheel:n         rim 0..n-1 in cyclic order, hub n
     *   amal:n1,..,nm   shared vertex 0, then the other n_i - 1 vertices of each clique in turn
     *   edge_amal:...   shared edge {0,1}, then the other n_i - 2 vertices of each clique in turn
     *   corona:B/m1,..  the base graph B keeps its labels; the copy of K_{m_i} hung on base
     *                   vertex i follows, in order of i
     *   join:A+B        A's vertices, then B's shifted by |A|
     *   unicyclic:c/..  cycle 0..c-1, then tree vertices in attachment order
     *   gadget:n        see gen_clique_gadget
     */
    enum class Family
    {
        path,
        cycle,
        complete,
        star,
        wheel,
        amal,
        edge_amal,
        corona,
        join,
        unicyclic,
        clique_gadget
    };

    /// A rooted tree hung on a cycle vertex: tree node i (1-based) has parent parents[i-1],
    /// where 0 denotes the cycle vertex itself and parents[i-1] < i.
    struct TreeAttachment
    {
        int cycle_vertex = 0;
        std::vector<int> parents;
    };

    struct FamilySpec
    {
        Family family = Family::path;
        std::vector<int> params;
        std::vector<FamilySpec> operands;
        std::vector<TreeAttachment> trees;
    };

    /// Compact grammar, e.g. "wheel:8", "amal:3,3,4", "corona:path:3/2,2,2", "join:cycle:4+complete:1",
    /// "unicyclic:5/1:0,1/3:0", "gadget:8".
    auto parse_family_spec(std::string_view text) -> FamilySpec;
    auto to_string(const FamilySpec & spec) -> std::string;

    auto family_name(Family f) -> std::string_view;

    /// Throws ValidationError naming the violated parameter constraint.
    void validate(const FamilySpec & spec);

    auto gen(const FamilySpec & spec) -> Graph;

    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto wheel_graph(int rim) -> Graph;
    auto amalgamation(const std::vector<int> & clique_orders) -> Graph;
    auto edge_amalgamation(const std::vector<int> & clique_orders) -> Graph;
    auto corona(const Graph & base, const std::vector<int> & clique_orders) -> Graph;
    auto join(const Graph & a, const Graph & b) -> Graph;
    auto unicyclic(int cycle_length, const std::vector<TreeAttachment> & trees) -> Graph;

    /// Graph with clique number n whose lmd and ldim_ms both equal ceil(log2 n).
    ///
    /// For k = ceil(log2 n) the clique holds u_1..u_k, v_0, v_1..v_{2^k-k-1}; every clique
    /// vertex x carries a label vector L(x) with L(x)_j in {2j, 2j+1}. v_0 is all-even,
    /// v_{2^k-k-1} all-odd, u_j even only at j, and v_1.. take the remaining vectors in
    /// lexicographic order. Each u_j carries a path u_{j,1}..u_{j,2j}, and u_{j,1} is joined
    /// to every labelled v with L(v)_j = 2j, so d(v, u_{j,2j}) = L(v)_j. When n < 2^k the
    /// vertices v_1..v_{2^k-n} are dropped. The landmarks are {u_{j,2j}}.
    ///
    /// Labelling: clique vertices first (u_1..u_k, v_0, surviving v_i ascending), then
    /// the paths P_1..P_k. n = 2 gives K_2 with landmark {0}.
    struct CliqueGadget
    {
        Graph graph;
        VertexSet landmarks;
        int k = 0;
        VertexSet clique;
        /// Label vector per clique vertex, indexed by vertex id (empty for path vertices).
        std::vector<std::vector<int>> labels;
        /// Original index i of each surviving v_i, by vertex id; -1 for non-v vertices.
        std::vector<int> v_index;
    };

    auto gen_clique_gadget(int n) -> CliqueGadget;

    /// Every connected labelled graph on n <= 7 vertices, each exactly once.
    class ConnectedGraphs
    {
    public:
        explicit ConnectedGraphs(int n);

        auto next() -> std::optional<Graph>;

    private:
        int _n;
        std::vector<Edge> _slots;
        std::uint64_t _mask = 0;
        std::uint64_t _end = 0;
    };

    template <typename Callback>
    void for_each_connected(int n, Callback && f)
    {
        ConnectedGraphs graphs(n);
        while (auto g = graphs.next())
            f(*g);
    }
}
