#include <multires/bounds.hpp>
#include <multires/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <map>

namespace multires
{
    namespace
    {
        using BigInt = boost::multiprecision::cpp_int;

        auto choose(int n, int k) -> BigInt
        {
            if (k < 0 || k > n)
                return 0;
            BigInt r = 1;
            for (int i = 1; i <= k; ++i)
                r = r * (n - k + i) / i;
            return r;
        }

        auto ceil_log2(int x) -> int
        {
            return x <= 1 ? 0 : std::bit_width(static_cast<unsigned>(x - 1));
        }
    }

    auto g_bound(int d, int chi) -> int
    {
        if (d < 2)
            throw ValidationError("g(d, chi) needs diameter d >= 2, got " + std::to_string(d));
        if (chi < 1)
            throw ValidationError("g(d, chi) needs chi >= 1, got " + std::to_string(chi));

        for (int k = 1; ; ++k) {
            BigInt count = choose(k + d - 1, d - 1) + choose(k + d - 2, d - 1) - d + 1;
            if (count >= chi)
                return k;
        }
    }

    auto to_string(BoundSource s) -> std::string
    {
        switch (s) {
            case BoundSource::trivial: return "trivial";
            case BoundSource::clique_log: return "clique_log";
            case BoundSource::chromatic_gdchi: return "chromatic_gdchi";
            case BoundSource::nonbipartite_2: return "nonbipartite_2";
            case BoundSource::k_end_count: return "k_end_count";
            case BoundSource::n_minus_1: return "n_minus_1";
        }
        return "?";
    }

    auto to_string(InfiniteReason r) -> std::string
    {
        switch (r) {
            case InfiniteReason::diam_le_2: return "diam_le_2";
            case InfiniteReason::triple_open_neighbourhood: return "triple_open_neighborhood";
            case InfiniteReason::triple_k_end: return "triple_k_end";
        }
        return "?";
    }

    auto BoundReport::best_lower(Variant v) const -> Bound
    {
        Bound best{v, 1, BoundSource::trivial};
        for (auto & b : lower)
            if (b.variant == v && b.value > best.value)
                best = b;
        return best;
    }

    auto infinite_certificates(const Graph & g, int clique_cap) -> std::vector<InfiniteCertificate>
    {
        std::vector<InfiniteCertificate> result;
        DistMatrix dm(g);

        // With diameter <= 2 every representation is {0?, 1^a, 2^b}; landmarks would need
        // pairwise distinct degrees inside W, which forces |W| = 1, and then at most two
        // non-landmarks can be told apart. Hence infinite once n >= 4.
        if (dm.diameter() <= 2 && g.order() >= 4) {
            InfiniteCertificate c{Variant::md, InfiniteReason::diam_le_2, {}, {}, dm.diameter(), {}};
            c.description = "diameter " + std::to_string(dm.diameter()) + " <= 2 on " + std::to_string(g.order()) + " vertices";
            result.push_back(c);
        }

        std::map<std::uint64_t, VertexSet> by_neighbourhood;
        for (Vertex v = 0; v < g.order(); ++v)
            by_neighbourhood[g.neighbours(v).bits()].insert(v);
        for (auto & [nbhd, members] : by_neighbourhood)
            if (members.size() >= 3) {
                auto triple = members.to_vector();
                auto witness = VertexSet::of({triple[0], triple[1], triple[2]});
                InfiniteCertificate c{Variant::md, InfiniteReason::triple_open_neighbourhood, witness, {}, dm.diameter(), {}};
                c.description = "vertices " + to_string(witness) + " share open neighbourhood " + to_string(VertexSet{nbhd});
                result.push_back(c);
                break;
            }

        for (auto & k : k_end_structure(g, clique_cap))
            if (k.ends.size() >= 3) {
                InfiniteCertificate c{Variant::lmd, InfiniteReason::triple_k_end, k.ends, k.clique, dm.diameter(), {}};
                c.description = "clique " + to_string(k.clique) + " has K-end vertices " + to_string(k.ends);
                result.push_back(c);
                break;
            }

        return result;
    }

    auto lower_bounds(const Graph & g, InvariantCaps caps) -> BoundReport
    {
        BoundReport report;
        DistMatrix dm(g);
        auto n = g.order();
        bool bipartite = two_colouring(g).has_value();
        auto omega = clique_number(g, caps.clique);

        std::optional<int> chi;
        try {
            chi = chromatic_number(g, caps.chromatic);
        }
        catch (const CapExceeded & e) {
            report.skipped.push_back(std::string("chromatic_gdchi: ") + e.what());
        }

        int k_end_lmd = 0, k_end_outer = 0;
        for (auto & k : k_end_structure(g, caps.clique)) {
            auto e = k.ends.size();
            if (e == 2)
                ++k_end_lmd;
            if (e >= 2)
                k_end_outer += e - 1;
        }

        for (auto v : {Variant::lmd, Variant::ldim_ms}) {
            report.lower.push_back({v, 1, BoundSource::trivial});
            if (auto b = ceil_log2(omega); b >= 1)
                report.lower.push_back({v, b, BoundSource::clique_log});
            if (chi && dm.diameter() >= 2)
                report.lower.push_back({v, g_bound(dm.diameter(), *chi), BoundSource::chromatic_gdchi});
            if (! bipartite)
                report.lower.push_back({v, 2, BoundSource::nonbipartite_2});
            auto ke = v == Variant::lmd ? k_end_lmd : k_end_outer;
            if (ke >= 1)
                report.lower.push_back({v, ke, BoundSource::k_end_count});
        }

        if (n >= 2)
            for (auto v : {Variant::dim_ms, Variant::ldim_ms})
                report.upper.push_back({v, n - 1, BoundSource::n_minus_1});

        report.infinite = infinite_certificates(g, caps.clique);
        return report;
    }

    auto dms_extremal_check(const Graph & g, const DimensionResult & dim_ms) -> bool
    {
        DistMatrix dm(g);
        bool extremal = dim_ms.value == DimValue::finite(g.order() - 1);
        bool regular_small_diameter = is_regular(g) && dm.diameter() <= 2;
        return extremal == regular_small_diameter;
    }

    auto maxsubgraph_bound(const Graph & g) -> std::optional<MaxSubgraphBound>
    {
        auto core = two_core(g);
        if (! core)
            return std::nullopt;
        MaxSubgraphBound result;
        result.core = *core;
        result.subgraph = g.induced(*core, &result.mapping);
        return result;
    }
}
