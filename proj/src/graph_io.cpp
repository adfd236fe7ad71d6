#include <multires/graph.hpp>
#include <multires/errors.hpp>

#include <charconv>
#include <set>

namespace multires
{
    namespace
    {
        auto trim(std::string_view s) -> std::string_view
        {
            auto is_space = [] (char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
            while (! s.empty() && is_space(s.front()))
                s.remove_prefix(1);
            while (! s.empty() && is_space(s.back()))
                s.remove_suffix(1);
            return s;
        }

        auto parse_vertex(std::string_view token, std::size_t line) -> int
        {
            int value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size() || value < 0)
                throw ParseError(line, "expected a non-negative integer vertex id, got '" + std::string(token) + "'");
            if (value >= max_vertices)
                throw ParseError(line, "vertex id " + std::string(token) + " exceeds the " + std::to_string(max_vertices) + "-vertex limit");
            return value;
        }
    }

    auto parse_edge_list(std::string_view text) -> Graph
    {
        std::vector<Edge> edges;
        int max_id = -1;
        std::size_t line_no = 0;

        while (! text.empty()) {
            auto eol = text.find('\n');
            auto line = trim(text.substr(0, eol));
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
            ++line_no;

            if (line.empty() || line.front() == '#')
                continue;

            std::vector<std::string_view> tokens;
            while (! line.empty()) {
                auto sp = line.find_first_of(" \t");
                tokens.push_back(line.substr(0, sp));
                line = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
            }
            if (tokens.size() != 2)
                throw ParseError(line_no, "expected exactly two vertex ids");

            auto u = parse_vertex(tokens[0], line_no), v = parse_vertex(tokens[1], line_no);
            if (u == v)
                throw ValidationError("line " + std::to_string(line_no) + ": loop edge at vertex " + std::to_string(u));
            edges.emplace_back(u, v);
            max_id = std::max({max_id, u, v});
        }

        if (edges.empty())
            throw ParseError(line_no, "edge list contains no edges");
        return Graph::from_edges(max_id + 1, edges);
    }

    auto to_edge_list(const Graph & g) -> std::string
    {
        std::string out;
        for (auto [u, v] : g.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }

    // graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
    // packed six bits per byte, most significant first, each byte offset by 63.

    auto parse_graph6(std::string_view line) -> Graph
    {
        line = trim(line);
        if (line.starts_with(">>graph6<<"))
            line.remove_prefix(10);
        if (line.empty())
            throw ParseError(1, "empty graph6 string");

        for (char c : line)
            if (c < 63 || c > 126)
                throw ParseError(1, "invalid graph6 character '" + std::string(1, c) + "'");

        std::size_t pos = 0;
        std::size_t n = 0;
        if (line[0] != 126) {
            n = static_cast<std::size_t>(line[0] - 63);
            pos = 1;
        }
        else {
            if (line.size() < 4 || line[1] == 126)
                throw ParseError(1, "truncated or unsupported graph6 size header");
            for (std::size_t i = 1; i <= 3; ++i)
                n = (n << 6) | static_cast<std::size_t>(line[i] - 63);
            pos = 4;
        }
        if (n > static_cast<std::size_t>(max_vertices))
            throw ValidationError("graph6 header declares " + std::to_string(n) + " vertices; limit is " + std::to_string(max_vertices));

        auto bits = n * (n - (n ? 1 : 0)) / 2;
        auto expected = (bits + 5) / 6;
        if (line.size() - pos != expected)
            throw ParseError(1, "graph6 body has " + std::to_string(line.size() - pos) + " bytes, expected " + std::to_string(expected));

        Graph g(static_cast<int>(n));
        std::size_t k = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i, ++k) {
                auto byte = line[pos + k / 6] - 63;
                if ((byte >> (5 - k % 6)) & 1)
                    g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        // padding bits must be zero
        for (; k < expected * 6; ++k)
            if (((line[pos + k / 6] - 63) >> (5 - k % 6)) & 1)
                throw ParseError(1, "nonzero padding bits in graph6 body");
        return g;
    }

    auto to_graph6(const Graph & g) -> std::string
    {
        std::string out;
        auto n = static_cast<std::size_t>(g.order());
        if (n < 63)
            out += static_cast<char>(63 + n);
        else {
            out += static_cast<char>(126);
            for (int shift = 12; shift >= 0; shift -= 6)
                out += static_cast<char>(63 + ((n >> shift) & 63));
        }

        int acc = 0, filled = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
                if (++filled == 6) {
                    out += static_cast<char>(63 + acc);
                    acc = filled = 0;
                }
            }
        if (filled)
            out += static_cast<char>(63 + (acc << (6 - filled)));
        return out;
    }
}
