#include "line_parser.hpp"

#include <pgq/incidence.hpp>

#include <algorithm>
#include <exception>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

namespace pgq
{
    IncidenceStructure::IncidenceStructure(int points, std::vector<Line> lines, Int s, Int t) :
        _points(points), _lines(std::move(lines)), _s(s), _t(t)
    {
        if (points < 0)
            throw DomainError("negative point count");
        if (s < 1 || t < 1)
            throw DomainError("incidence structure needs s, t >= 1");
        for (std::size_t i = 0; i < _lines.size(); ++i) {
            const auto & l = _lines[i];
            if (l.empty())
                throw DomainError("line " + std::to_string(i) + " is empty");
            for (std::size_t j = 0; j < l.size(); ++j) {
                if (l[j] < 0 || l[j] >= points)
                    throw DomainError("line " + std::to_string(i) + " has point " + std::to_string(l[j]) + " out of range");
                if (j > 0 && l[j] <= l[j - 1])
                    throw DomainError("line " + std::to_string(i) + " is not strictly increasing");
            }
        }
    }

    auto IncidenceStructure::lines_through() const -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(_points));
        for (std::size_t i = 0; i < _lines.size(); ++i)
            for (Point p : _lines[i])
                out[static_cast<std::size_t>(p)].push_back(static_cast<int>(i));
        return out;
    }

    auto verify_axioms(const IncidenceStructure & inc) -> AxiomReport
    {
        const auto & lines = inc.lines();
        auto n = static_cast<std::size_t>(inc.points());

        for (std::size_t i = 0; i < lines.size(); ++i)
            if (std::ssize(lines[i]) != inc.s() + 1)
                return {false, "i", -1, static_cast<int>(i),
                    "line has " + std::to_string(lines[i].size()) + " points, expected s+1 = " + std::to_string(inc.s() + 1)};

        // collinear[p] = points sharing a line with p; a pair seen twice means two lines meet twice
        std::vector<Bitset> collinear(n, Bitset(n));
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t a = 0; a < lines[i].size(); ++a)
                for (std::size_t b = a + 1; b < lines[i].size(); ++b) {
                    auto p = static_cast<std::size_t>(lines[i][a]), q = static_cast<std::size_t>(lines[i][b]);
                    if (collinear[p].test(q))
                        return {false, "i", static_cast<int>(p), static_cast<int>(i),
                            "points " + std::to_string(p) + " and " + std::to_string(q) + " lie on two common lines"};
                    collinear[p].set(q);
                    collinear[q].set(p);
                }

        auto through = inc.lines_through();
        for (std::size_t p = 0; p < n; ++p)
            if (std::ssize(through[p]) != inc.t() + 1)
                return {false, "ii", static_cast<int>(p), -1,
                    "point is on " + std::to_string(through[p].size()) + " lines, expected t+1 = " + std::to_string(inc.t() + 1)};

        // axiom (iii), parallel over points; the smallest point's first bad line wins
        std::vector<std::pair<int, std::size_t>> bad(n, {-1, 0});
#pragma omp parallel for schedule(dynamic, 4)
        for (std::size_t p = 0; p < n; ++p) {
            Bitset own(lines.size());
            for (int l : through[p])
                own.set(static_cast<std::size_t>(l));
            for (std::size_t l = 0; l < lines.size(); ++l) {
                if (own.test(l))
                    continue;
                std::size_t seen = 0;
                for (Point q : lines[l])
                    if (collinear[p].test(static_cast<std::size_t>(q)))
                        ++seen;
                if (seen != 1) {
                    bad[p] = {static_cast<int>(l), seen};
                    break;
                }
            }
        }
        for (std::size_t p = 0; p < n; ++p)
            if (bad[p].first >= 0)
                return {false, "iii", static_cast<int>(p), bad[p].first,
                    "point off the line is collinear with " + std::to_string(bad[p].second) + " of its points, expected 1"};

        return {true, {}, -1, -1, {}};
    }

    namespace
    {
        void require_axioms(const IncidenceStructure & inc, const char * what)
        {
            auto r = verify_axioms(inc);
            if (! r.pass)
                throw DomainError(std::string(what) + " requires a structure satisfying the axioms; axiom (" + r.axiom + ") fails: " + r.reason);
        }
    }

    auto dual(const IncidenceStructure & inc) -> IncidenceStructure
    {
        require_axioms(inc, "dual");
        return IncidenceStructure(static_cast<int>(inc.lines().size()), inc.lines_through(), inc.t(), inc.s());
    }

    auto collinearity_graph(const IncidenceStructure & inc) -> Graph
    {
        require_axioms(inc, "collinearity_graph");
        std::vector<Edge> edges;
        for (const auto & l : inc.lines())
            for (std::size_t a = 0; a < l.size(); ++a)
                for (std::size_t b = a + 1; b < l.size(); ++b)
                    edges.emplace_back(l[a], l[b]);
        return Graph(inc.points(), edges);
    }

    auto extract_gq(const Graph & g, const GQParams & p) -> Extraction
    {
        auto expected = derive_srg(p);
        auto check = verify_srg(g);
        if (! check.params)
            throw DomainError("graph is not strongly regular: " + check.reason);
        if (! (*check.params == expected))
            throw DomainError("graph verifies as srg" + to_string(*check.params) + ", expected srg" + to_string(expected));

        auto claws = claw_numbers(g);
        auto target = static_cast<int>(p.t() + 1);
        for (Vertex x = 0; x < g.size(); ++x) {
            auto c = claws[static_cast<std::size_t>(x)];
            if (c < target)
                throw InternalInconsistency("vertex " + std::to_string(x) + " has claw number " + std::to_string(c) + " < t+1");
        }
        for (Vertex x = 0; x < g.size(); ++x) {
            auto c = claws[static_cast<std::size_t>(x)];
            if (c > target)
                return {std::nullopt, x, c,
                    "pseudo-GQ evidence: vertex " + std::to_string(x) + " has claw number " + std::to_string(c) + " > t+1 = " + std::to_string(target)};
        }

        auto n = static_cast<std::size_t>(g.size());
        std::vector<LocalPartition> parts(n);
        std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t x = 0; x < n; ++x) {
            try {
                parts[x] = clique_partition_of_local_unchecked(g, static_cast<Vertex>(x), p);
            }
            catch (...) {
                errors[x] = std::current_exception();
            }
        }
        for (auto & e : errors)
            if (e)
                std::rethrow_exception(e);

        // line_of[(x, y)] = {x} + (clique of the partition at x that contains y)
        std::map<Edge, Line> line_of;
        for (std::size_t x = 0; x < n; ++x) {
            if (! parts[x].cover)
                throw InternalInconsistency("claw number t+1 at vertex " + std::to_string(x) + " but its local graph does not split: " + parts[x].reason);
            for (const auto & clique : parts[x].cover->cliques) {
                Line line = clique;
                line.push_back(static_cast<Point>(x));
                std::sort(line.begin(), line.end());
                for (Vertex y : clique)
                    line_of[{static_cast<Vertex>(x), y}] = line;
            }
        }

        std::set<Line> lines;
        for (auto [u, v] : g.edges()) {
            const auto & from_u = line_of.at({u, v});
            if (from_u != line_of.at({v, u}))
                throw InternalInconsistency("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") gets different lines from its endpoints");
            lines.insert(from_u);
        }

        IncidenceStructure inc(g.size(), std::vector<Line>(lines.begin(), lines.end()), p.s(), p.t());
        auto expected_lines = checked_mul(checked_add(checked_mul(p.s(), p.t()), 1), checked_add(p.t(), 1));
        if (std::ssize(inc.lines()) != expected_lines)
            throw InternalInconsistency("extracted " + std::to_string(inc.lines().size()) + " lines, expected (st+1)(t+1) = " + std::to_string(expected_lines));
        auto axioms = verify_axioms(inc);
        if (! axioms.pass)
            throw InternalInconsistency("extracted structure fails axiom (" + axioms.axiom + "): " + axioms.reason);
        return {std::move(inc), -1, 0, {}};
    }

    auto read_pgqinc(std::istream & in) -> IncidenceStructure
    {
        constexpr const char * fmt = "pgqinc";
        std::string line;
        detail::next_line(in, line, 1, fmt);
        if (line != "pgqinc 1")
            throw ParseError("pgqinc: bad header '" + line + "'");
        detail::next_line(in, line, 2, fmt);
        auto header = detail::parse_exact(line, 4, 2, fmt);
        auto points = header[0], count = header[1];
        if (points > 1'000'000 || count > 100'000'000)
            throw ParseError("pgqinc: structure too large");

        std::vector<Line> lines;
        for (long long i = 0; i < count; ++i) {
            detail::next_line(in, line, i + 3, fmt);
            auto ids = detail::parse_uints(line, i + 3, fmt);
            lines.emplace_back(ids.begin(), ids.end());
        }
        detail::expect_end(in, fmt);

        try {
            return IncidenceStructure(static_cast<int>(points), std::move(lines), header[2], header[3]);
        }
        catch (const DomainError & e) {
            throw ParseError(std::string("pgqinc: ") + e.what());
        }
    }

    void write_pgqinc(std::ostream & out, const IncidenceStructure & inc)
    {
        std::ostringstream buf;
        buf << "pgqinc 1\n" << inc.points() << ' ' << inc.lines().size() << ' ' << inc.s() << ' ' << inc.t() << '\n';
        for (const auto & l : inc.lines()) {
            for (std::size_t i = 0; i < l.size(); ++i)
                buf << (i ? " " : "") << l[i];
            buf << '\n';
        }
        out << buf.str();
    }
}
