#pragma once

#include <multires/bounds.hpp>
#include <multires/solver.hpp>
#include <multires/verify.hpp>

#include <nlohmann/json.hpp>

namespace multires
{
    using json = nlohmann::ordered_json;

    /// Finite values as integers, infinity as the string "infinity".
    auto to_json(DimValue v) -> json;
    auto to_json(VertexSet s) -> json;
    auto to_json(const DimensionResult & r) -> json;
    auto to_json(const Certificate & c, Variant v, VertexSet landmarks) -> json;
    auto to_json(const BoundReport & r) -> json;
    auto to_json(const TheoremCheck & c) -> json;
}
