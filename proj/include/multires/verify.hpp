#pragma once

#include <multires/generators.hpp>
#include <multires/solver.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multires
{
    /// The published value of a family/variant combination, or nullopt when no result covers it.
    auto closed_form(const FamilySpec & family, Variant v) -> std::optional<DimValue>;

    /// True iff every maximal rim path of W_n induced by the landmarks (and, unless outer,
    /// by the rim vertices outside the landmarks) has order 1 or 3. The rim is 0..n-1 and
    /// the hub n, as produced by wheel_graph. A fully covered rim counts as order n.
    auto wheel_path_structure(int n, VertexSet landmarks, bool outer) -> bool;

    struct InstanceCheck
    {
        std::string instance;
        std::string expected;
        std::string computed;
        bool pass = false;
        /// Hit a solver cap or budget; reported but not counted as a failure.
        bool skipped = false;
        std::string note;
    };

    struct TheoremCheck
    {
        std::string id;
        std::string range;
        std::vector<InstanceCheck> instances;
        std::int64_t elapsed_ms = 0;

        auto failures() const -> std::size_t;
        auto skipped() const -> std::size_t;
        auto pass() const -> bool { return failures() == 0; }
    };

    struct Range
    {
        int lo = 0;
        int hi = 0;
    };

    auto parse_range(std::string_view text) -> Range;

    struct HarnessOptions
    {
        /// Overrides the theorem's default parameter range.
        std::optional<Range> range;
        /// Independent instances run on this many threads.
        int jobs = 1;
        SolverOptions solver;
        /// Instances for the random self-consistency check.
        int random_graphs = 500;
        unsigned seed = 20240601;
    };

    struct TheoremInfo
    {
        std::string_view id;
        std::string_view summary;
        Range default_range;
    };

    auto theorem_catalogue() -> const std::vector<TheoremInfo> &;

    /// Throws ValidationError for unknown ids.
    auto run_theorem(std::string_view id, const HarnessOptions & opts = {}) -> TheoremCheck;

    /// Exhaustive-corpus helper: all six dimensions of g by the default solver.
    struct SixDimensions
    {
        DimValue dim = DimValue::infinite(), ldim = DimValue::infinite(), md = DimValue::infinite(),
            dim_ms = DimValue::infinite(), lmd = DimValue::infinite(), ldim_ms = DimValue::infinite();

        auto operator[] (Variant v) const -> DimValue;
    };

    auto six_dimensions(const Graph & g, const SolverOptions & opts = {}) -> SixDimensions;

    /// Observation-1 chain violations for one graph (empty when all hold).
    auto chain_violations(const Graph & g, const SixDimensions & d) -> std::vector<std::string>;
}
