#include <multires/bounds.hpp>
#include <multires/errors.hpp>
#include <multires/generators.hpp>
#include <multires/report.hpp>
#include <multires/solver.hpp>
#include <multires/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace multires;

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_input = 1,
        exit_limit = 2,
        exit_failed = 3
    };

    struct Input
    {
        std::string file;
        std::string format = "auto";
        std::string gen;
    };

    void add_input(CLI::App * cmd, Input & in)
    {
        cmd->add_option("file", in.file, "graph file; standard input when omitted and no --gen");
        cmd->add_option("--format", in.format, "input format (auto detects by the first data line)")
            ->check(CLI::IsMember({"auto", "graph6", "edges"}));
        cmd->add_option("--gen", in.gen, "generate the graph from a family spec, e.g. wheel:8");
    }

    auto looks_like_edges(const std::string & text) -> bool
    {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#')
                continue;
            return line.find_first_of(" \t", first) != std::string::npos;
        }
        return true;
    }

    auto read_graph(const Input & in) -> Graph
    {
        if (! in.gen.empty()) {
            if (! in.file.empty())
                throw InputError("give either a file or --gen, not both");
            return gen(parse_family_spec(in.gen));
        }
        std::string text;
        if (in.file.empty() || in.file == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            text = buf.str();
        }
        else {
            std::ifstream f(in.file);
            if (! f)
                throw InputError("cannot open '" + in.file + "'");
            std::ostringstream buf;
            buf << f.rdbuf();
            text = buf.str();
        }
        bool edges = in.format == "edges" || (in.format == "auto" && looks_like_edges(text));
        if (edges)
            return parse_edge_list(text);
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line))
            if (! line.empty() && line != "\r")
                return parse_graph6(line);
        throw InputError("no graph in input");
    }

    auto variants_of(const std::string & name) -> std::vector<Variant>
    {
        if (name == "all")
            return {all_variants.begin(), all_variants.end()};
        auto v = parse_variant(name);
        if (! v)
            throw InputError("unknown variant '" + name + "'");
        return {*v};
    }

    auto vertex_cap() -> int
    {
        auto env = std::getenv("MULTIRES_CAP");
        if (! env || ! *env)
            return SolverOptions{}.vertex_cap;
        char * end = nullptr;
        auto cap = std::strtol(env, &end, 10);
        if (*end != '\0' || cap < 1 || cap > max_vertices)
            throw InputError("MULTIRES_CAP must be an integer in 1.." + std::to_string(max_vertices));
        return static_cast<int>(cap);
    }

    auto parse_witness(const std::string & text) -> VertexSet
    {
        std::vector<Vertex> vs;
        std::istringstream items(text);
        std::string item;
        while (std::getline(items, item, ',')) {
            try {
                std::size_t used = 0;
                auto v = std::stoi(item, &used);
                if (used != item.size() || v < 0 || v >= max_vertices)
                    throw std::invalid_argument(item);
                vs.push_back(v);
            }
            catch (const std::logic_error &) {
                throw InputError("bad witness vertex '" + item + "'");
            }
        }
        if (vs.empty())
            throw InputError("--witness needs at least one vertex");
        return VertexSet::of(vs);
    }

    void print_results_table(const std::vector<DimensionResult> & rs)
    {
        std::cout << std::left << std::setw(9) << "variant" << std::setw(10) << "value" << std::setw(24) << "witness"
                  << std::setw(12) << "subsets" << "ms\n";
        for (auto & r : rs)
            std::cout << std::setw(9) << to_string(r.variant) << std::setw(10) << to_string(r.value)
                      << std::setw(24) << (r.witness ? to_string(*r.witness) : "-") << std::setw(12) << r.subsets_checked
                      << r.elapsed_ms << '\n';
    }

    void print_theorem_table(const std::vector<TheoremCheck> & checks)
    {
        for (auto & c : checks) {
            std::cout << (c.pass() ? "PASS" : "FAIL") << "  " << std::left << std::setw(20) << c.id << std::setw(8) << c.range
                      << (c.instances.size() - c.failures() - c.skipped()) << '/' << c.instances.size() << " instances"
                      << (c.skipped() ? "  (" + std::to_string(c.skipped()) + " skipped)" : "") << "  " << c.elapsed_ms << " ms\n";
            for (auto & i : c.instances)
                if (! i.pass)
                    std::cout << "      " << i.instance << ": expected " << i.expected << ", computed " << i.computed
                              << (i.note.empty() ? "" : " (" + i.note + ")") << '\n';
        }
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact resolvability dimensions of small graphs"};
    app.require_subcommand(1);

    Input in;
    std::string variant = "all";
    std::string output = "json";
    std::string witness;
    int jobs = 1;
    std::uint64_t budget = 0;

    auto compute = app.add_subcommand("compute", "exact dimension(s) of a graph");
    add_input(compute, in);
    compute->add_option("--variant", variant, "dim|ldim|md|dim_ms|lmd|ldim_ms|all");
    compute->add_option("--jobs", jobs, "solver threads")->check(CLI::Range(1, 256));
    compute->add_option("--budget", budget, "give up after this many subsets");
    compute->add_option("--output", output)->check(CLI::IsMember({"json", "table"}));

    auto certify_cmd = app.add_subcommand("certify", "check that a landmark set resolves");
    add_input(certify_cmd, in);
    certify_cmd->add_option("--variant", variant)->required();
    certify_cmd->add_option("--witness", witness, "comma separated landmarks, e.g. 0,2,5")->required();

    std::string spec;
    std::string gen_format = "graph6";
    auto gen_cmd = app.add_subcommand("gen", "emit a generated graph");
    gen_cmd->add_option("spec", spec, "family spec, e.g. corona:path:3/2,2,2")->required();
    gen_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"graph6", "edges"}));

    auto bounds_cmd = app.add_subcommand("bounds", "lower/upper bounds and infinity certificates");
    add_input(bounds_cmd, in);

    std::string theorem, range, report;
    bool all = false;
    auto verify_cmd = app.add_subcommand("verify", "check closed forms against the exact solver");
    auto theorem_opt = verify_cmd->add_option("--theorem", theorem, "theorem id; see --list");
    auto all_opt = verify_cmd->add_flag("--all", all, "every theorem at its default range");
    theorem_opt->excludes(all_opt);
    verify_cmd->add_option("--range", range, "N or LO..HI")->needs(theorem_opt);
    verify_cmd->add_option("--jobs", jobs, "instances run in parallel")->check(CLI::Range(1, 256));
    verify_cmd->add_option("--output", output)->check(CLI::IsMember({"json", "table"}));
    verify_cmd->add_option("--report", report, "also write the JSON report here");
    bool list = false;
    verify_cmd->add_flag("--list", list, "list theorem ids");

    int order = 0;
    auto enumerate_cmd = app.add_subcommand("enumerate", "stream every connected labelled graph of order n");
    enumerate_cmd->add_option("n", order)->required()->check(CLI::Range(1, 7));
    enumerate_cmd->add_option("--format", gen_format)->check(CLI::IsMember({"graph6", "edges"}));

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        std::cerr << "error[usage]: " << e.what() << '\n';
        return exit_input;
    }

    try {
        SolverOptions opts;
        opts.vertex_cap = vertex_cap();
        if (budget)
            opts.subset_budget = budget;

        if (*compute) {
            opts.parallel_shards = jobs;
            auto g = read_graph(in);
            std::vector<DimensionResult> results;
            for (auto v : variants_of(variant))
                results.push_back(dimension(g, v, opts));
            if (output == "table")
                print_results_table(results);
            else if (results.size() == 1)
                std::cout << to_json(results.front()).dump(2) << '\n';
            else {
                auto arr = json::array();
                for (auto & r : results)
                    arr.push_back(to_json(r));
                std::cout << arr.dump(2) << '\n';
            }
        }
        else if (*certify_cmd) {
            auto g = read_graph(in);
            auto vs = variants_of(variant);
            auto landmarks = parse_witness(witness);
            bool valid = true;
            auto arr = json::array();
            for (auto v : vs) {
                auto c = certify(g, landmarks, v);
                valid = valid && c.valid;
                arr.push_back(to_json(c, v, landmarks));
            }
            std::cout << (arr.size() == 1 ? arr.front() : arr).dump(2) << '\n';
            return valid ? exit_ok : exit_failed;
        }
        else if (*gen_cmd) {
            auto g = gen(parse_family_spec(spec));
            std::cout << (gen_format == "edges" ? to_edge_list(g) : to_graph6(g) + "\n");
        }
        else if (*bounds_cmd) {
            auto g = read_graph(in);
            std::cout << to_json(lower_bounds(g, opts.caps)).dump(2) << '\n';
        }
        else if (*verify_cmd) {
            if (list) {
                for (auto & t : theorem_catalogue())
                    std::cout << std::left << std::setw(20) << t.id << t.default_range.lo << ".." << t.default_range.hi
                              << "  " << t.summary << '\n';
                return exit_ok;
            }
            if (theorem.empty() && ! all)
                throw InputError("verify needs --theorem <id> or --all");
            HarnessOptions h;
            h.jobs = jobs;
            h.solver = opts;
            if (! range.empty())
                h.range = parse_range(range);
            std::vector<TheoremCheck> checks;
            if (all)
                for (auto & t : theorem_catalogue())
                    checks.push_back(run_theorem(t.id, h));
            else
                checks.push_back(run_theorem(theorem, h));

            json doc = {{"pass", true}, {"theorems", json::array()}};
            bool pass = true;
            for (auto & c : checks) {
                pass = pass && c.pass();
                doc["theorems"].push_back(to_json(c));
            }
            doc["pass"] = pass;
            if (output == "json")
                std::cout << doc.dump(2) << '\n';
            else
                print_theorem_table(checks);
            if (! report.empty()) {
                std::ofstream f(report);
                if (! f)
                    throw InputError("cannot write '" + report + "'");
                f << doc.dump(2) << '\n';
            }
            return pass ? exit_ok : exit_failed;
        }
        else if (*enumerate_cmd) {
            for_each_connected(order, [&] (const Graph & g) {
                if (gen_format == "edges")
                    std::cout << to_edge_list(g) << '\n';
                else
                    std::cout << to_graph6(g) << '\n';
            });
        }
    }
    catch (const Error & e) {
        std::cerr << "error[" << e.category() << "]: " << e.what() << '\n';
        auto category = std::string_view(e.category());
        return category == "cap" || category == "budget" ? exit_limit : exit_input;
    }
    return exit_ok;
}
