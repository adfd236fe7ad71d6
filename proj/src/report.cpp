#include <multires/report.hpp>

namespace multires
{
    auto to_json(DimValue v) -> json
    {
        if (v.is_infinite())
            return "infinity";
        return v.value();
    }

    auto to_json(VertexSet s) -> json
    {
        return s.to_vector();
    }

    auto to_json(const DimensionResult & r) -> json
    {
        return {
            {"variant", to_string(r.variant)},
            {"value", to_json(r.value)},
            {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
            {"certificate", r.certificate ? json(*r.certificate) : json(nullptr)},
            {"subsets_checked", r.subsets_checked},
            {"elapsed_ms", r.elapsed_ms},
        };
    }

    auto to_json(const Certificate & c, Variant v, VertexSet landmarks) -> json
    {
        auto pairs = json::array();
        for (auto [a, b] : c.violating)
            pairs.push_back({a, b});
        return {
            {"variant", to_string(v)},
            {"landmarks", to_json(landmarks)},
            {"valid", c.valid},
            {"violating_pairs", pairs},
        };
    }

    auto to_json(const BoundReport & r) -> json
    {
        auto bounds = [] (const std::vector<Bound> & bs) {
            auto out = json::array();
            for (auto & b : bs)
                out.push_back({{"variant", to_string(b.variant)}, {"value", b.value}, {"source", to_string(b.source)}});
            return out;
        };
        auto infinite = json::array();
        for (auto & c : r.infinite)
            infinite.push_back({
                {"variant", to_string(c.variant)},
                {"reason", to_string(c.reason)},
                {"witness", to_json(c.witness)},
                {"clique", to_json(c.clique)},
                {"diameter", c.diameter},
                {"description", c.description},
            });
        json best;
        for (auto v : {Variant::lmd, Variant::ldim_ms}) {
            auto b = r.best_lower(v);
            best[std::string(to_string(v))] = {{"value", b.value}, {"source", to_string(b.source)}};
        }
        return {
            {"lower", bounds(r.lower)},
            {"best_lower", best},
            {"upper", bounds(r.upper)},
            {"infinite", infinite},
            {"skipped", r.skipped},
        };
    }

    auto to_json(const TheoremCheck & c) -> json
    {
        auto rows = json::array();
        for (auto & i : c.instances)
            rows.push_back({
                {"instance", i.instance},
                {"expected", i.expected},
                {"computed", i.computed},
                {"pass", i.pass},
                {"skipped", i.skipped},
                {"note", i.note},
            });
        return {
            {"theorem", c.id},
            {"range", c.range},
            {"pass", c.pass()},
            {"failures", c.failures()},
            {"skipped", c.skipped()},
            {"elapsed_ms", c.elapsed_ms},
            {"instances", rows},
        };
    }
}
