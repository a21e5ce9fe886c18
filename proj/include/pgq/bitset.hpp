#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace pgq
{
    /// Fixed-size dynamic bitset used for adjacency rows and candidate sets.
    class Bitset
    {
    public:
        Bitset() = default;
        explicit Bitset(std::size_t n) : _n(n), _words((n + 63) / 64, 0) {}

        [[nodiscard]] auto size() const -> std::size_t { return _n; }

        void set(std::size_t i) { _words[i / 64] |= std::uint64_t{1} << (i % 64); }
        void reset(std::size_t i) { _words[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        [[nodiscard]] auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1U; }

        [[nodiscard]] auto count() const -> std::size_t
        {
            std::size_t c = 0;
            for (auto w : _words)
                c += static_cast<std::size_t>(std::popcount(w));
            return c;
        }

        [[nodiscard]] auto any() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return true;
            return false;
        }

        /// Index of the lowest set bit, or size() if none.
        [[nodiscard]] auto first() const -> std::size_t
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i])
                    return i * 64 + static_cast<std::size_t>(std::countr_zero(_words[i]));
            return _n;
        }

        /// Count of set bits in (*this & other) without materialising it.
        [[nodiscard]] auto intersection_count(const Bitset & other) const -> std::size_t
        {
            std::size_t c = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                c += static_cast<std::size_t>(std::popcount(_words[i] & other._words[i]));
            return c;
        }

        auto operator&=(const Bitset & o) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= o._words[i];
            return *this;
        }

        /// *this &= ~o
        auto subtract(const Bitset & o) -> Bitset &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~o._words[i];
            return *this;
        }

        friend auto operator&(Bitset a, const Bitset & b) -> Bitset { return a &= b; }
        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

        template <typename F>
        void for_each(F && f) const
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                for (auto w = _words[i]; w; w &= w - 1)
                    f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        }

        [[nodiscard]] auto to_vector() const -> std::vector<int>
        {
            std::vector<int> out;
            for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
            return out;
        }

    private:
        std::size_t _n = 0;
        std::vector<std::uint64_t> _words;
    };
}
