#include <multires/solver.hpp>
#include <multires/bounds.hpp>
#include <multires/errors.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <thread>

namespace multires
{
    auto to_string(DimValue v) -> std::string
    {
        return v.is_infinite() ? "infinity" : std::to_string(v.value());
    }

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct Binomials
        {
            std::uint64_t table[max_vertices + 1][max_vertices + 1] = {};

            Binomials()
            {
                for (int n = 0; n <= max_vertices; ++n) {
                    table[n][0] = 1;
                    for (int k = 1; k <= n; ++k)
                        table[n][k] = table[n - 1][k - 1] + (k <= n - 1 ? table[n - 1][k] : 0);
                }
            }

            auto operator() (int n, int k) const -> std::uint64_t
            {
                return k < 0 || k > n ? 0 : table[n][k];
            }
        };

        const Binomials binomial;

        /// k-subsets of {0..n-1} in lexicographic order, addressable by rank.
        class Combination
        {
        public:
            Combination(int n, int k, std::uint64_t rank) :
                _n(n), _k(k)
            {
                // unrank: walk positions choosing the smallest element that leaves rank in range
                int next = 0;
                for (int i = 0; i < k; ++i)
                    for (int c = next; ; ++c) {
                        auto block = binomial(n - c - 1, k - i - 1);
                        if (rank < block) {
                            _c[i] = c;
                            next = c + 1;
                            break;
                        }
                        rank -= block;
                    }
            }

            auto set() const -> VertexSet
            {
                std::uint64_t bits = 0;
                for (int i = 0; i < _k; ++i)
                    bits |= std::uint64_t{1} << _c[i];
                return VertexSet{bits};
            }

            auto advance() -> bool
            {
                int i = _k - 1;
                while (i >= 0 && _c[i] == _n - _k + i)
                    --i;
                if (i < 0)
                    return false;
                ++_c[i];
                for (int j = i + 1; j < _k; ++j)
                    _c[j] = _c[j - 1] + 1;
                return true;
            }

        private:
            int _n, _k;
            int _c[max_vertices] = {};
        };

        struct SearchContext
        {
            const Graph & g;
            const DistMatrix & dm;
            Variant variant;
            std::vector<Constraint> constraints;
            std::optional<std::uint64_t> budget;
            std::atomic<std::uint64_t> checked{0};
            std::atomic<std::uint64_t> excluded{0};
            std::atomic<bool> over_budget{false};

            auto admitted(VertexSet s) const -> bool
            {
                return std::all_of(constraints.begin(), constraints.end(), [&] (const Constraint & c) { return c.admits(s); });
            }

            auto charge() -> bool
            {
                auto done = checked.fetch_add(1, std::memory_order_relaxed) + 1;
                if (budget && done > *budget) {
                    over_budget = true;
                    return false;
                }
                return true;
            }
        };

        constexpr auto none = std::numeric_limits<std::uint64_t>::max();

        // Scans ranks [begin, end) of the k-subsets, stopping at the first resolving one or
        // once some other shard has found a smaller rank.
        void scan_range(SearchContext & ctx, int k, std::uint64_t begin, std::uint64_t end, std::atomic<std::uint64_t> & best)
        {
            if (begin >= end)
                return;
            Resolver resolver(ctx.g, ctx.dm);
            Combination comb(ctx.g.order(), k, begin);
            for (auto rank = begin; rank < end; ++rank, comb.advance()) {
                if (rank > best.load(std::memory_order_relaxed) || ctx.over_budget)
                    return;
                auto s = comb.set();
                if (! ctx.admitted(s)) {
                    ctx.excluded.fetch_add(1, std::memory_order_relaxed);
                    continue;
                }
                if (! ctx.charge())
                    return;
                if (resolver.resolves(s, ctx.variant)) {
                    auto current = best.load();
                    while (rank < current && ! best.compare_exchange_weak(current, rank))
                        ;
                    return;
                }
            }
        }

        auto first_resolving(SearchContext & ctx, int k, int shards) -> std::optional<VertexSet>
        {
            auto n = ctx.g.order();
            auto total = binomial(n, k);
            std::atomic<std::uint64_t> best{none};

            if (shards <= 1 || total < 2)
                scan_range(ctx, k, 0, total, best);
            else {
                auto count = static_cast<std::uint64_t>(shards);
                auto chunk = (total + count - 1) / count;
                std::vector<std::jthread> workers;
                for (std::uint64_t s = 0; s < count; ++s) {
                    auto b = std::min(total, s * chunk), e = std::min(total, (s + 1) * chunk);
                    workers.emplace_back([&ctx, k, b, e, &best] { scan_range(ctx, k, b, e, best); });
                }
            }

            if (ctx.over_budget)
                throw BudgetExhausted("inconclusive: subset budget of " + std::to_string(*ctx.budget)
                        + " exhausted at cardinality " + std::to_string(k));
            if (best == none)
                return std::nullopt;
            return Combination(n, k, best).set();
        }

        void check_vertex_cap(const Graph & g, const SolverOptions & opts)
        {
            if (g.order() > opts.vertex_cap)
                throw CapExceeded("solver vertex cap exceeded: graph has " + std::to_string(g.order())
                        + " vertices, cap is " + std::to_string(opts.vertex_cap));
        }

        auto describe(const KEndClique & k) -> std::string
        {
            return "clique " + to_string(k.clique) + " has K-end vertices " + to_string(k.ends);
        }
    }

    auto required_vertices(const Graph & g, Variant v, int clique_cap) -> RequiredVertices
    {
        RequiredVertices result;
        if (v != Variant::lmd && v != Variant::ldim_ms)
            return result;

        for (auto & k : k_end_structure(g, clique_cap)) {
            auto e = k.ends.size();
            if (e < 2)
                continue;
            if (v == Variant::lmd) {
                if (e >= 3) {
                    if (! result.contradiction)
                        result.contradiction = k;
                }
                else
                    result.constraints.push_back(Constraint{k.ends, 1, 1, false});
            }
            else
                result.constraints.push_back(Constraint{k.ends, e - 1, e, e == 2});
        }
        return result;
    }

    auto dimension(const Graph & g, Variant v, const SolverOptions & opts) -> DimensionResult
    {
        auto start = Clock::now();
        check_vertex_cap(g, opts);
        DistMatrix dm(g);

        DimensionResult result;
        result.variant = v;
        auto finish = [&] () -> DimensionResult {
            result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
            return result;
        };

        auto clique_cap = std::max(opts.caps.clique, g.order());

        if (opts.use_infinite_shortcuts && may_be_infinite(v))
            for (auto & c : infinite_certificates(g, clique_cap))
                if (c.variant == v) {
                    result.value = DimValue::infinite();
                    result.certificate = to_string(c.reason) + ": " + c.description;
                    return finish();
                }

        SearchContext ctx{g, dm, v, {}, opts.subset_budget};
        if (opts.use_structural_pruning) {
            auto required = required_vertices(g, v, clique_cap);
            if (required.contradiction) {
                // every subset violates the K-end condition, nothing to enumerate
                result.value = DimValue::infinite();
                result.certificate = "triple_k_end: " + describe(*required.contradiction);
                return finish();
            }
            ctx.constraints = std::move(required.constraints);
        }

        for (int k = 1; k <= g.order(); ++k) {
            if (auto w = first_resolving(ctx, k, opts.parallel_shards)) {
                result.value = DimValue::finite(k);
                result.witness = *w;
                result.subsets_checked = ctx.checked;
                return finish();
            }
        }

        result.value = DimValue::infinite();
        result.subsets_checked = ctx.checked;
        result.certificate = "exhausted all 2^" + std::to_string(g.order()) + " - 1 subsets";
        if (ctx.excluded > 0)
            result.certificate = *result.certificate + " (" + std::to_string(ctx.excluded.load()) + " excluded by K-end constraints)";
        return finish();
    }

    auto minimum_bases(const Graph & g, Variant v, const SolverOptions & opts) -> std::vector<VertexSet>
    {
        check_vertex_cap(g, opts);
        DistMatrix dm(g);
        Resolver resolver(g, dm);

        std::vector<Constraint> constraints;
        if (opts.use_structural_pruning) {
            auto required = required_vertices(g, v, std::max(opts.caps.clique, g.order()));
            if (required.contradiction)
                return {};
            constraints = std::move(required.constraints);
        }

        std::uint64_t checked = 0;
        std::vector<VertexSet> bases;
        for (int k = 1; k <= g.order() && bases.empty(); ++k) {
            Combination comb(g.order(), k, 0);
            do {
                auto s = comb.set();
                if (! std::all_of(constraints.begin(), constraints.end(), [&] (const Constraint & c) { return c.admits(s); }))
                    continue;
                if (opts.subset_budget && ++checked > *opts.subset_budget)
                    throw BudgetExhausted("inconclusive: subset budget exhausted while listing bases");
                if (resolver.resolves(s, v))
                    bases.push_back(s);
            } while (comb.advance());
        }
        return bases;
    }

    auto certify(const Graph & g, VertexSet landmarks, Variant v) -> Certificate
    {
        DistMatrix dm(g);
        Certificate c;
        c.violating = violating_pairs(dm, g, landmarks, v);
        c.valid = c.violating.empty();
        return c;
    }
}
