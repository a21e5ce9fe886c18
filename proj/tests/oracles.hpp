#pragma once

// Brute-force references used only by tests. None of these touch the bitset kernels.

#include <pgq/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace pgq::oracle
{
    /// Dense boolean adjacency matrix built from the edge list.
    inline auto matrix(const Graph & g) -> std::vector<std::vector<bool>>
    {
        auto n = static_cast<std::size_t>(g.size());
        std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
        for (auto [u, v] : g.edges()) {
            a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
            a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
        }
        return a;
    }

    /// Size of the largest independent set, by enumerating every subset. n <= 20.
    inline auto max_independent_set_size(const std::vector<std::vector<bool>> & a) -> int
    {
        auto n = a.size();
        int best = 0;
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            int size = __builtin_popcount(mask);
            if (size <= best)
                continue;
            bool independent = true;
            for (std::size_t i = 0; i < n && independent; ++i)
                if (mask >> i & 1U)
                    for (std::size_t j = i + 1; j < n; ++j)
                        if ((mask >> j & 1U) && a[i][j]) {
                            independent = false;
                            break;
                        }
            if (independent)
                best = size;
        }
        return best;
    }

    /// Local graph at x as a dense matrix on the sorted neighbourhood.
    inline auto local_matrix(const std::vector<std::vector<bool>> & a, std::size_t x) -> std::vector<std::vector<bool>>
    {
        std::vector<std::size_t> nb;
        for (std::size_t y = 0; y < a.size(); ++y)
            if (a[x][y])
                nb.push_back(y);
        std::vector<std::vector<bool>> l(nb.size(), std::vector<bool>(nb.size(), false));
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = 0; j < nb.size(); ++j)
                l[i][j] = a[nb[i]][nb[j]];
        return l;
    }

    /// Claw numbers by subset enumeration on each local graph.
    inline auto claw_numbers(const Graph & g) -> std::vector<int>
    {
        auto a = matrix(g);
        std::vector<int> out;
        for (std::size_t x = 0; x < a.size(); ++x)
            out.push_back(max_independent_set_size(local_matrix(a, x)));
        return out;
    }

    /// (v, k, lambda, mu) by counting common neighbours of every pair through the dense matrix.
    inline auto srg_parameters(const Graph & g) -> std::optional<SrgParams>
    {
        auto a = matrix(g);
        auto n = a.size();
        std::optional<long long> k, lambda, mu;
        for (std::size_t u = 0; u < n; ++u) {
            long long deg = 0;
            for (std::size_t v = 0; v < n; ++v)
                deg += a[u][v];
            if (k && *k != deg)
                return std::nullopt;
            k = deg;
            for (std::size_t v = u + 1; v < n; ++v) {
                long long common = 0;
                for (std::size_t w = 0; w < n; ++w)
                    common += a[u][w] && a[v][w];
                auto & slot = a[u][v] ? lambda : mu;
                if (slot && *slot != common)
                    return std::nullopt;
                slot = common;
            }
        }
        if (! lambda || ! mu || *mu == 0)
            return std::nullopt;
        return SrgParams{static_cast<Int>(n), *k, *lambda, *mu};
    }

    /// G(n, p) with a fixed generator; the edge list comes out shuffled.
    inline auto random_graph(std::mt19937 & rng, int n, double p) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        std::shuffle(edges.begin(), edges.end(), rng);
        return Graph(n, edges);
    }
}
