#include <pgq/graph.hpp>

#include <algorithm>

namespace pgq
{
    namespace
    {
        /// Maximum clique by branch and bound over bitsets, pruned by a greedy colouring:
        /// vertices taking colour c can extend the current clique by at most c.
        class MaxClique
        {
        public:
            explicit MaxClique(std::vector<Bitset> rows) : _rows(std::move(rows)) {}

            auto solve() -> std::vector<Vertex>
            {
                Bitset all(_rows.size());
                for (std::size_t v = 0; v < _rows.size(); ++v)
                    all.set(v);
                expand(all);
                std::sort(_best.begin(), _best.end());
                return _best;
            }

        private:
            void colour(const Bitset & p, std::vector<std::size_t> & order, std::vector<std::size_t> & bounds) const
            {
                Bitset uncoloured = p;
                std::size_t c = 0;
                while (uncoloured.any()) {
                    ++c;
                    Bitset q = uncoloured;
                    while (q.any()) {
                        auto v = q.first();
                        q.reset(v);
                        q.subtract(_rows[v]);
                        uncoloured.reset(v);
                        order.push_back(v);
                        bounds.push_back(c);
                    }
                }
            }

            void expand(Bitset p)
            {
                std::vector<std::size_t> order, bounds;
                colour(p, order, bounds);
                for (std::size_t i = order.size(); i-- > 0;) {
                    if (_current.size() + bounds[i] <= _best.size())
                        return;
                    auto v = order[i];
                    _current.push_back(static_cast<Vertex>(v));
                    auto next = p & _rows[v];
                    if (next.any())
                        expand(std::move(next));
                    else if (_current.size() > _best.size())
                        _best = _current;
                    _current.pop_back();
                    p.reset(v);
                }
            }

            std::vector<Bitset> _rows;
            std::vector<Vertex> _current, _best;
        };
    }

    auto maximum_independent_set(const Graph & g) -> std::vector<Vertex>
    {
        // independent sets of g are cliques of its complement
        auto n = static_cast<std::size_t>(g.size());
        std::vector<Bitset> complement(n, Bitset(n));
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (u != v && ! g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                    complement[u].set(v);
        return MaxClique(std::move(complement)).solve();
    }
}
