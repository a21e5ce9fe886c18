#include <pgq/errors.hpp>
#include <pgq/graph.hpp>

#include <algorithm>
#include <unordered_map>

namespace pgq
{
    Graph::Graph(int n, std::span<const Edge> edges)
    {
        if (n < 0)
            throw DomainError("negative vertex count");
        _rows.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
        for (auto [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n = " + std::to_string(n));
            if (u == v)
                throw DomainError("loop at vertex " + std::to_string(u));
            if (_rows[idx(u)].test(idx(v)))
                throw DomainError("repeated edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
            _rows[idx(u)].set(idx(v));
            _rows[idx(v)].set(idx(u));
            ++_edge_count;
        }
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        out.reserve(_edge_count);
        for (std::size_t u = 0; u < _rows.size(); ++u)
            _rows[u].for_each([&](std::size_t v) {
                if (v > u)
                    out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            });
        return out;
    }

    auto Graph::connected() const -> bool
    {
        if (_rows.empty())
            return true;
        Bitset seen(_rows.size());
        std::vector<std::size_t> stack{0};
        seen.set(0);
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            _rows[u].for_each([&](std::size_t v) {
                if (! seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
            });
        }
        return seen.count() == _rows.size();
    }

    namespace
    {
        struct Reference
        {
            int k = 0;
            std::optional<int> lambda, mu;
        };

        /// Degree, lambda and mu taken from vertex 0 and its first neighbour / non-neighbour.
        auto reference_counts(const Graph & g) -> Reference
        {
            Reference ref;
            ref.k = g.degree(0);
            for (Vertex v = 1; v < g.size(); ++v) {
                auto c = static_cast<int>(g.neighbours(0).intersection_count(g.neighbours(v)));
                if (g.adjacent(0, v) && ! ref.lambda)
                    ref.lambda = c;
                if (! g.adjacent(0, v) && ! ref.mu)
                    ref.mu = c;
            }
            return ref;
        }

        auto pre_checks(const Graph & g, const Reference & ref) -> std::optional<SrgCheck>
        {
            for (Vertex v = 1; v < g.size(); ++v)
                if (g.degree(v) != ref.k)
                    return SrgCheck{std::nullopt, Edge{0, v},
                        "not regular: deg(0) = " + std::to_string(ref.k) + ", deg(" + std::to_string(v) + ") = " + std::to_string(g.degree(v))};
            if (! ref.mu)
                return SrgCheck{std::nullopt, std::nullopt, "complete graph"};
            if (! g.connected())
                return SrgCheck{std::nullopt, std::nullopt, "disconnected"};
            if (! ref.lambda)
                return SrgCheck{std::nullopt, std::nullopt, "edgeless graph"};
            return std::nullopt;
        }

        /// First v > u whose common-neighbour count disagrees with the reference.
        auto first_violation_in_row(const Graph & g, const Reference & ref, Vertex u) -> std::optional<std::pair<Vertex, int>>
        {
            for (Vertex v = u + 1; v < g.size(); ++v) {
                auto c = static_cast<int>(g.neighbours(u).intersection_count(g.neighbours(v)));
                if (c != (g.adjacent(u, v) ? *ref.lambda : *ref.mu))
                    return std::pair{v, c};
            }
            return std::nullopt;
        }

        auto violation_report(const Graph & g, const Reference & ref, Vertex u, Vertex v, int c) -> SrgCheck
        {
            bool adj = g.adjacent(u, v);
            return SrgCheck{std::nullopt, Edge{u, v},
                std::string(adj ? "adjacent" : "non-adjacent") + " pair has " + std::to_string(c) + " common neighbours, expected " +
                    std::to_string(adj ? *ref.lambda : *ref.mu)};
        }

        auto success(const Graph & g, const Reference & ref) -> SrgCheck
        {
            return SrgCheck{SrgParams{g.size(), ref.k, *ref.lambda, *ref.mu}, std::nullopt, {}};
        }
    }

    auto verify_srg(const Graph & g) -> SrgCheck
    {
        if (g.size() == 0)
            throw DomainError("verify_srg on the empty graph");
        auto ref = reference_counts(g);
        if (auto early = pre_checks(g, ref))
            return *early;

        std::vector<std::optional<std::pair<Vertex, int>>> rows(static_cast<std::size_t>(g.size()));
#pragma omp parallel for schedule(dynamic, 8)
        for (Vertex u = 0; u < g.size(); ++u)
            rows[static_cast<std::size_t>(u)] = first_violation_in_row(g, ref, u);

        for (Vertex u = 0; u < g.size(); ++u)
            if (auto & r = rows[static_cast<std::size_t>(u)])
                return violation_report(g, ref, u, r->first, r->second);
        return success(g, ref);
    }

    auto verify_srg_serial(const Graph & g) -> SrgCheck
    {
        if (g.size() == 0)
            throw DomainError("verify_srg on the empty graph");
        auto ref = reference_counts(g);
        if (auto early = pre_checks(g, ref))
            return *early;
        for (Vertex u = 0; u < g.size(); ++u)
            if (auto r = first_violation_in_row(g, ref, u))
                return violation_report(g, ref, u, r->first, r->second);
        return success(g, ref);
    }

    auto local_graph(const Graph & g, Vertex x) -> LocalGraph
    {
        if (x < 0 || x >= g.size())
            throw DomainError("vertex " + std::to_string(x) + " out of range");
        LocalGraph lg;
        lg.center = x;
        lg.vertices = g.neighbours(x).to_vector();
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < lg.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < lg.vertices.size(); ++j)
                if (g.adjacent(lg.vertices[i], lg.vertices[j]))
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        lg.induced = Graph(static_cast<int>(lg.vertices.size()), edges);
        return lg;
    }

    auto claw_number(const Graph & g, Vertex x) -> int
    {
        return static_cast<int>(maximum_independent_set(local_graph(g, x).induced).size());
    }

    auto claw_numbers(const Graph & g) -> std::vector<int>
    {
        std::vector<int> out(static_cast<std::size_t>(g.size()));
#pragma omp parallel for schedule(dynamic, 1)
        for (Vertex x = 0; x < g.size(); ++x)
            out[static_cast<std::size_t>(x)] = claw_number(g, x);
        return out;
    }

    auto claw_numbers_serial(const Graph & g) -> std::vector<int>
    {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(g.size()));
        for (Vertex x = 0; x < g.size(); ++x)
            out.push_back(claw_number(g, x));
        return out;
    }

    namespace
    {
        void require_params(const Graph & g, const GQParams & p)
        {
            auto expected = derive_srg(p);
            auto got = verify_srg(g);
            if (! got.params)
                throw DomainError("graph is not strongly regular: " + got.reason);
            if (! (*got.params == expected))
                throw DomainError("graph verifies as srg" + to_string(*got.params) + " but (s, t) = (" + std::to_string(p.s()) + ", " +
                    std::to_string(p.t()) + ") requires srg" + to_string(expected));
        }
    }

    auto clique_partition_of_local(const Graph & g, Vertex x, const GQParams & p) -> LocalPartition
    {
        require_params(g, p);
        return clique_partition_of_local_unchecked(g, x, p);
    }

    auto clique_partition_of_local_unchecked(const Graph & g, Vertex x, const GQParams & p) -> LocalPartition
    {
        if (x < 0 || x >= g.size())
            throw DomainError("vertex " + std::to_string(x) + " out of range");

        const auto & local = g.neighbours(x);
        Bitset assigned(static_cast<std::size_t>(g.size()));
        CliqueCover cover;

        auto candidate_of = [&](Vertex y) {
            auto c = g.common_neighbours(x, y);
            c.set(static_cast<std::size_t>(y));
            return c;
        };

        for (Vertex y : local.to_vector()) {
            if (assigned.test(static_cast<std::size_t>(y)))
                continue;
            auto cand = candidate_of(y);
            auto members = cand.to_vector();

            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (! g.adjacent(members[i], members[j]))
                        return {std::nullopt, y,
                            "{y} + Gamma(x, y) is not a clique: " + std::to_string(members[i]) + " and " + std::to_string(members[j]) + " are not adjacent"};

            if (cand.intersection_count(assigned) != 0)
                return {std::nullopt, y, "{y} + Gamma(x, y) meets an earlier clique"};

            for (Vertex z : members)
                if (! (candidate_of(z) == cand))
                    return {std::nullopt, y, "{z} + Gamma(x, z) differs for member z = " + std::to_string(z)};

            if (std::ssize(members) != p.s())
                return {std::nullopt, y, "clique has order " + std::to_string(members.size()) + ", expected s = " + std::to_string(p.s())};

            for (Vertex z : members)
                assigned.set(static_cast<std::size_t>(z));
            cover.cliques.push_back(std::move(members));
        }

        if (std::ssize(cover.cliques) != p.t() + 1)
            return {std::nullopt, x, "local graph splits into " + std::to_string(cover.cliques.size()) + " cliques, expected t+1 = " + std::to_string(p.t() + 1)};
        return {std::move(cover), -1, {}};
    }

    auto verify_clique_cover(const Graph & g, const CliqueCover & c) -> CoverCheck
    {
        CoverCheck out;
        out.diagonal.assign(static_cast<std::size_t>(g.size()), 0);
        std::unordered_map<std::uint64_t, int> pair_counts;
        auto key = [&](Vertex a, Vertex b) { return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(g.size()) + static_cast<std::uint64_t>(b); };

        for (std::size_t ci = 0; ci < c.cliques.size(); ++ci) {
            auto members = c.cliques[ci];
            std::sort(members.begin(), members.end());
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (members[i] < 0 || members[i] >= g.size())
                    throw StructuralError("clique " + std::to_string(ci) + " lists vertex " + std::to_string(members[i]) + " out of range");
                if (i > 0 && members[i] == members[i - 1])
                    throw StructuralError("clique " + std::to_string(ci) + " repeats vertex " + std::to_string(members[i]));
            }
            for (std::size_t i = 0; i < members.size(); ++i) {
                ++out.diagonal[static_cast<std::size_t>(members[i])];
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    if (! g.adjacent(members[i], members[j]))
                        throw StructuralError("set " + std::to_string(ci) + " is not a clique: " + std::to_string(members[i]) + " and " +
                            std::to_string(members[j]) + " are not adjacent");
                    ++pair_counts[key(members[i], members[j])];
                }
            }
        }

        // off-diagonal of R R^T must equal A: non-edges are already excluded above
        for (auto [u, v] : g.edges()) {
            auto it = pair_counts.find(key(u, v));
            int count = it == pair_counts.end() ? 0 : it->second;
            if (count != 1) {
                out.witness = Edge{u, v};
                out.reason = "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") lies in " + std::to_string(count) + " cliques";
                return out;
            }
        }
        out.pass = true;
        return out;
    }

    auto claw_lower_bound_check(const Graph & g, const GQParams & p) -> ClawBoundCheck
    {
        require_params(g, p);
        ClawBoundCheck out;
        out.claw_numbers = claw_numbers(g);
        auto it = std::min_element(out.claw_numbers.begin(), out.claw_numbers.end());
        out.minimum = *it;
        out.witness = static_cast<Vertex>(it - out.claw_numbers.begin());
        for (int c : out.claw_numbers)
            ++out.histogram[c];
        out.pass = out.minimum >= p.t() + 1;
        return out;
    }
}
