#include <pgq/incidence.hpp>

#include <array>

namespace pgq
{
    namespace
    {
        void require_m(int m)
        {
            if (m < 2)
                throw DomainError("generator parameter m must be at least 2, got " + std::to_string(m));
            if (m > 2000)
                throw DomainError("generator parameter m too large: " + std::to_string(m));
        }
    }

    auto gen_rook(int m) -> Graph
    {
        require_m(m);
        std::vector<Edge> edges;
        auto id = [m](int r, int c) { return r * m + c; };
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                for (int k = 0; k < m; ++k) {
                    if (k > c)
                        edges.emplace_back(id(r, c), id(r, k));
                    if (k > r)
                        edges.emplace_back(id(r, c), id(k, c));
                }
        return Graph(m * m, edges);
    }

    auto gen_complete_bipartite(int m) -> Graph
    {
        require_m(m);
        std::vector<Edge> edges;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                edges.emplace_back(a, m + b);
        return Graph(2 * m, edges);
    }

    auto gen_kneser_6_2() -> Graph
    {
        std::vector<std::pair<int, int>> duads;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                duads.emplace_back(a, b);
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < duads.size(); ++i)
            for (std::size_t j = i + 1; j < duads.size(); ++j) {
                auto [a, b] = duads[i];
                auto [c, d] = duads[j];
                if (a != c && a != d && b != c && b != d)
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        return Graph(15, edges);
    }

    auto gen_symplectic_w3() -> Graph
    {
        // projective points of GF(3)^4, normalised so the first nonzero coordinate is 1
        std::vector<std::array<int, 4>> pts;
        for (int code = 0; code < 81; ++code) {
            std::array<int, 4> x{code / 27, (code / 9) % 3, (code / 3) % 3, code % 3};
            int lead = 0;
            for (int c : x)
                if (c != 0) {
                    lead = c;
                    break;
                }
            if (lead == 1)
                pts.push_back(x);
        }
        auto form = [](const std::array<int, 4> & x, const std::array<int, 4> & y) {
            return (((x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2]) % 3) + 3) % 3;
        };
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (form(pts[i], pts[j]) == 0)
                    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return Graph(static_cast<int>(pts.size()), edges);
    }

    auto gen_shrikhande() -> Graph
    {
        constexpr std::array<std::pair<int, int>, 3> gens{{{1, 0}, {0, 1}, {1, 1}}};
        std::vector<Edge> edges;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (auto [di, dj] : gens) {
                    // +g from (i,j); -g is the same edge seen from the other end
                    int u = 4 * i + j, v = 4 * ((i + di) % 4) + (j + dj) % 4;
                    edges.emplace_back(std::min(u, v), std::max(u, v));
                }
        return Graph(16, edges);
    }
}
