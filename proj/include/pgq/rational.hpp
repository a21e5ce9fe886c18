#pragma once

#include <pgq/checked.hpp>

#include <compare>
#include <string>

namespace pgq
{
    /// Exact rational with a positive denominator, always kept in lowest terms.
    /// Arithmetic is checked; comparison cross-multiplies in 128 bits, so it never overflows.
    class Rational
    {
    public:
        constexpr Rational() = default;
        Rational(Int value) : _num(value), _den(1) {}
        Rational(Int num, Int den);

        [[nodiscard]] auto num() const -> Int { return _num; }
        [[nodiscard]] auto den() const -> Int { return _den; }
        [[nodiscard]] auto is_integer() const -> bool { return _den == 1; }
        [[nodiscard]] auto floor() const -> Int { return floor_div(_num, _den); }

        /// "p/q", or "p" when integral.
        [[nodiscard]] auto to_string() const -> std::string;

        /// Decimal rendering for humans, truncated to `places` digits. Never used for verdicts.
        [[nodiscard]] auto to_decimal(int places = 6) const -> std::string;

        friend auto operator+(const Rational & a, const Rational & b) -> Rational;
        friend auto operator-(const Rational & a, const Rational & b) -> Rational;
        friend auto operator*(const Rational & a, const Rational & b) -> Rational;
        friend auto operator/(const Rational & a, const Rational & b) -> Rational;

        friend auto operator==(const Rational & a, const Rational & b) -> bool = default;
        friend auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering;

    private:
        Int _num = 0;
        Int _den = 1;
    };
}
