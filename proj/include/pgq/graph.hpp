#pragma once

#include <pgq/bitset.hpp>
#include <pgq/params.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pgq
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
    /// Immutable once built; the constructor rejects loops, out-of-range endpoints and repeated edges.
    class Graph
    {
    public:
        Graph() = default;
        Graph(int n, std::span<const Edge> edges);

        [[nodiscard]] auto size() const -> int { return static_cast<int>(_rows.size()); }
        [[nodiscard]] auto edge_count() const -> std::size_t { return _edge_count; }
        [[nodiscard]] auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[idx(u)].test(idx(v)); }
        [[nodiscard]] auto neighbours(Vertex u) const -> const Bitset & { return _rows[idx(u)]; }
        [[nodiscard]] auto degree(Vertex u) const -> int { return static_cast<int>(_rows[idx(u)].count()); }

        /// Gamma(u, v): common neighbours.
        [[nodiscard]] auto common_neighbours(Vertex u, Vertex v) const -> Bitset { return _rows[idx(u)] & _rows[idx(v)]; }

        /// All edges (u, v) with u < v, sorted.
        [[nodiscard]] auto edges() const -> std::vector<Edge>;

        [[nodiscard]] auto connected() const -> bool;

        friend auto operator==(const Graph & a, const Graph & b) -> bool { return a._rows == b._rows; }

    private:
        static auto idx(Vertex v) -> std::size_t { return static_cast<std::size_t>(v); }

        std::vector<Bitset> _rows;
        std::size_t _edge_count = 0;
    };

    /// Subgraph induced on Gamma(center). vertices[i] is the original id of local vertex i.
    struct LocalGraph
    {
        Vertex center = 0;
        std::vector<Vertex> vertices;
        Graph induced;
    };

    /// A family of vertex sets, each sorted, each meant to induce a complete subgraph.
    struct CliqueCover
    {
        std::vector<std::vector<Vertex>> cliques;
    };

    /// Outcome of verify_srg: parameters on success, otherwise the first violating pair and why.
    struct SrgCheck
    {
        std::optional<SrgParams> params;
        std::optional<Edge> violation;
        std::string reason;
    };

    /// Checks regularity, constant lambda over edges, constant mu over non-edges, connectivity and
    /// non-completeness. Violations are reported at the lexicographically smallest pair.
    /// Parallel over rows; throws DomainError on the empty graph.
    auto verify_srg(const Graph & g) -> SrgCheck;

    /// Single-threaded reference for verify_srg.
    auto verify_srg_serial(const Graph & g) -> SrgCheck;

    auto local_graph(const Graph & g, Vertex x) -> LocalGraph;

    /// A maximum independent set of g (sorted), by exact branch and bound.
    /// Worst case exponential; intended for local graphs of a few hundred vertices at most.
    auto maximum_independent_set(const Graph & g) -> std::vector<Vertex>;

    /// Largest r such that x is the centre of an induced r-claw.
    auto claw_number(const Graph & g, Vertex x) -> int;

    /// claw_number for every vertex, parallel over vertices.
    auto claw_numbers(const Graph & g) -> std::vector<int>;

    /// Single-threaded reference for claw_numbers.
    auto claw_numbers_serial(const Graph & g) -> std::vector<int>;

    struct LocalPartition
    {
        std::optional<CliqueCover> cover;
        Vertex witness = -1; ///< neighbour whose candidate {y} + Gamma(x, y) failed
        std::string reason;
    };

    /// Tries to split the local graph at x into t+1 disjoint s-cliques of the form {y} + Gamma(x, y).
    /// Throws DomainError unless g verifies as derive_srg(p).
    auto clique_partition_of_local(const Graph & g, Vertex x, const GQParams & p) -> LocalPartition;

    /// Same, for a graph already known to verify as derive_srg(p).
    auto clique_partition_of_local_unchecked(const Graph & g, Vertex x, const GQParams & p) -> LocalPartition;

    struct CoverCheck
    {
        bool pass = false;
        std::optional<Edge> witness;       ///< first edge not covered exactly once
        std::string reason;
        std::vector<std::int64_t> diagonal; ///< (R R^T - A)_{jj} = cliques containing j
    };

    /// Every edge lies in exactly one clique, i.e. R R^T = A + D with D diagonal.
    /// Off-diagonal entries are accumulated per clique pair, never as a dense v x v product.
    /// Throws StructuralError if a listed set is not a clique.
    auto verify_clique_cover(const Graph & g, const CliqueCover & c) -> CoverCheck;

    struct ClawBoundCheck
    {
        bool pass = false;
        int minimum = 0;
        Vertex witness = -1; ///< a vertex attaining the minimum
        std::vector<int> claw_numbers;
        std::map<int, int> histogram;
    };

    /// min claw number >= t+1 over all vertices, plus the claw-number histogram.
    auto claw_lower_bound_check(const Graph & g, const GQParams & p) -> ClawBoundCheck;

    /// "pgqgraph 1" / "n m" / m lines "u v" with u < v. Throws ParseError on any deviation.
    auto read_pgqgraph(std::istream & in) -> Graph;

    /// Canonical form: edges sorted.
    void write_pgqgraph(std::ostream & out, const Graph & g);
}
