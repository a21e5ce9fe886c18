#pragma once

#include <pgq/graph.hpp>
#include <pgq/params.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pgq
{
    using Point = int;
    using Line = std::vector<Point>;

    /// Points 0..points-1 and a list of lines, each a strictly increasing list of point ids,
    /// together with the declared (s, t). The constructor checks only this shape; the
    /// quadrangle axioms are checked by verify_axioms.
    class IncidenceStructure
    {
    public:
        IncidenceStructure(int points, std::vector<Line> lines, Int s, Int t);

        [[nodiscard]] auto points() const -> int { return _points; }
        [[nodiscard]] auto lines() const -> const std::vector<Line> & { return _lines; }
        [[nodiscard]] auto s() const -> Int { return _s; }
        [[nodiscard]] auto t() const -> Int { return _t; }

        /// For each point, the indices of the lines through it, ascending.
        [[nodiscard]] auto lines_through() const -> std::vector<std::vector<int>>;

    private:
        int _points;
        std::vector<Line> _lines;
        Int _s, _t;
    };

    struct AxiomReport
    {
        bool pass = false;
        std::string axiom;      ///< "i", "ii" or "iii" on failure
        int point = -1;         ///< offending point, when the failure has one
        int line = -1;          ///< offending line index, when the failure has one
        std::string reason;
    };

    /// (i) every line has s+1 points and two lines share at most one point;
    /// (ii) every point is on t+1 lines;
    /// (iii) for p not on L, exactly one point of L is collinear with p.
    /// The reported (point, line) is the lexicographically smallest violation of the first failing axiom.
    auto verify_axioms(const IncidenceStructure & inc) -> AxiomReport;

    /// Points and lines swapped, declared parameters (t, s). Throws DomainError if inc fails its axioms.
    auto dual(const IncidenceStructure & inc) -> IncidenceStructure;

    /// Points adjacent iff they share a line. Throws DomainError if inc fails its axioms.
    auto collinearity_graph(const IncidenceStructure & inc) -> Graph;

    struct Extraction
    {
        std::optional<IncidenceStructure> gq;
        Vertex witness = -1;   ///< smallest vertex with claw number > t+1
        int witness_claw = 0;
        std::string reason;    ///< "pseudo-GQ evidence: ..." on failure
    };

    /// Rebuilds the quadrangle from a graph all of whose claw numbers are t+1: every local graph
    /// splits into t+1 s-cliques C, and the lines are the sets {x} + C. Each edge's line is derived
    /// from both endpoints and the two must agree.
    /// Throws DomainError if g does not verify as derive_srg(p), and InternalInconsistency if the
    /// rebuilt structure is not a GQ(s, t).
    auto extract_gq(const Graph & g, const GQParams & p) -> Extraction;

    /// "pgqinc 1" / "points lines s t" / one line per line of the structure. Throws ParseError.
    auto read_pgqinc(std::istream & in) -> IncidenceStructure;

    void write_pgqinc(std::ostream & out, const IncidenceStructure & inc);

    /// (m x m) rook's graph: GQ(m-1, 1).
    auto gen_rook(int m) -> Graph;

    /// K_{m,m}: GQ(1, m-1).
    auto gen_complete_bipartite(int m) -> Graph;

    /// Kneser graph K(6,2) on the 15 duads of a 6-set: GQ(2,2).
    auto gen_kneser_6_2() -> Graph;

    /// Collinearity graph of the symplectic quadrangle W(3): the 40 points of PG(3,3),
    /// adjacent iff orthogonal under x0 y1 - x1 y0 + x2 y3 - x3 y2. GQ(3,3).
    auto gen_symplectic_w3() -> Graph;

    /// Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}: srg(16,6,2,2) but not a GQ.
    auto gen_shrikhande() -> Graph;
}
