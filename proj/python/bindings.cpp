#include <multires/bounds.hpp>
#include <multires/errors.hpp>
#include <multires/generators.hpp>
#include <multires/report.hpp>
#include <multires/solver.hpp>
#include <multires/verify.hpp>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace multires;

namespace
{
    // nlohmann -> python objects by way of the json module; the payloads are tiny
    auto to_py(const json & j) -> py::object
    {
        return py::module_::import("json").attr("loads")(j.dump());
    }

    auto variant_of(const std::string & name) -> Variant
    {
        auto v = parse_variant(name);
        if (! v)
            throw ValidationError("unknown variant '" + name + "'");
        return *v;
    }

    auto landmarks_of(const std::vector<int> & xs) -> VertexSet
    {
        VertexSet w;
        for (auto x : xs) {
            if (x < 0 || x >= max_vertices)
                throw ValidationError("landmark " + std::to_string(x) + " is out of range");
            w.insert(x);
        }
        return w;
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact (local, outer, multiset) metric dimensions of small graphs";

    auto base = py::register_exception<Error>(m, "Error");
    auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
    py::register_exception<BudgetExhausted>(m, "BudgetExhausted", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", input.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", input.ptr());
    py::register_exception<ConnectivityError>(m, "ConnectivityError", input.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([] (int n, const std::vector<Edge> & edges) { return Graph::from_edges(n, edges); }),
            py::arg("n"), py::arg("edges") = std::vector<Edge>{})
        .def_static("from_graph6", &parse_graph6)
        .def_static("from_edge_list", &parse_edge_list)
        .def_static("generate", [] (const std::string & spec) { return gen(parse_family_spec(spec)); })
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("connected", &Graph::connected)
        .def("graph6", [] (const Graph & g) { return to_graph6(g); })
        .def(py::self == py::self)
        .def("__repr__", [] (const Graph & g) {
            return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
        });

    m.attr("VARIANTS") = [] {
        std::vector<std::string> names;
        for (auto v : all_variants)
            names.emplace_back(to_string(v));
        return names;
    }();

    m.def("dimension",
        [] (const Graph & g, const std::string & variant, int jobs, std::optional<std::uint64_t> budget, bool naive) {
            auto opts = naive ? SolverOptions::naive() : SolverOptions{};
            opts.parallel_shards = jobs;
            opts.subset_budget = budget;
            auto v = variant_of(variant);
            DimensionResult r;
            {
                py::gil_scoped_release release;
                r = dimension(g, v, opts);
            }
            return to_py(to_json(r));
        },
        py::arg("graph"), py::arg("variant"), py::arg("jobs") = 1, py::arg("budget") = py::none(),
        py::arg("naive") = false);

    m.def("certify",
        [] (const Graph & g, const std::string & variant, const std::vector<int> & witness) {
            auto v = variant_of(variant);
            auto w = landmarks_of(witness);
            return to_py(to_json(certify(g, w, v), v, w));
        },
        py::arg("graph"), py::arg("variant"), py::arg("witness"));

    m.def("bounds", [] (const Graph & g) { return to_py(to_json(lower_bounds(g))); }, py::arg("graph"));

    m.def("theorems", [] {
        std::vector<std::string> ids;
        for (auto & t : theorem_catalogue())
            ids.emplace_back(t.id);
        return ids;
    });

    m.def("verify",
        [] (const std::string & id, std::optional<std::string> range, int jobs) {
            HarnessOptions opts;
            opts.jobs = jobs;
            if (range)
                opts.range = parse_range(*range);
            TheoremCheck r;
            {
                py::gil_scoped_release release;
                r = run_theorem(id, opts);
            }
            return to_py(to_json(r));
        },
        py::arg("theorem"), py::arg("range") = py::none(), py::arg("jobs") = 1);

    m.def("connected_graphs", [] (int n) {
        std::vector<Graph> out;
        for_each_connected(n, [&] (const Graph & g) { out.push_back(g); });
        return out;
    }, py::arg("n"));
}
