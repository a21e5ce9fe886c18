#include "line_parser.hpp"

#include <pgq/graph.hpp>

#include <ostream>
#include <sstream>

namespace pgq
{
    auto read_pgqgraph(std::istream & in) -> Graph
    {
        constexpr const char * fmt = "pgqgraph";
        std::string line;
        detail::next_line(in, line, 1, fmt);
        if (line != "pgqgraph 1")
            throw ParseError("pgqgraph: bad header '" + line + "'");
        detail::next_line(in, line, 2, fmt);
        auto header = detail::parse_exact(line, 2, 2, fmt);
        auto n = header[0], m = header[1];
        if (n > 1'000'000)
            throw ParseError("pgqgraph: vertex count too large");

        std::vector<Edge> edges;
        for (long long i = 0; i < m; ++i) {
            auto lineno = i + 3;
            detail::next_line(in, line, lineno, fmt);
            auto uv = detail::parse_exact(line, 2, lineno, fmt);
            if (! (uv[0] < uv[1] && uv[1] < n))
                throw ParseError("pgqgraph: line " + std::to_string(lineno) + ": need 0 <= u < v < n, got '" + line + "'");
            edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
        }
        detail::expect_end(in, fmt);

        try {
            return Graph(static_cast<int>(n), edges);
        }
        catch (const DomainError & e) {
            throw ParseError(std::string("pgqgraph: ") + e.what());
        }
    }

    void write_pgqgraph(std::ostream & out, const Graph & g)
    {
        std::ostringstream buf;
        buf << "pgqgraph 1\n" << g.size() << ' ' << g.edge_count() << '\n';
        for (auto [u, v] : g.edges())
            buf << u << ' ' << v << '\n';
        out << buf.str();
    }
}
