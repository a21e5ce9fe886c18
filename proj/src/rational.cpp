#include <pgq/rational.hpp>

#include <numeric>

namespace pgq
{
    namespace
    {
        __extension__ using Wide = __int128;
    }

    auto isqrt(Int n) -> Int
    {
        if (n < 0)
            throw DomainError("isqrt of negative value");
        Int lo = 0, hi = 3037000499; // floor(sqrt(2^63 - 1))
        while (lo < hi) {
            Int mid = lo + (hi - lo + 1) / 2;
            if (mid * mid <= n)
                lo = mid;
            else
                hi = mid - 1;
        }
        return lo;
    }

    auto ceil_sqrt(Int n) -> Int
    {
        Int r = isqrt(n);
        return (r * r == n) ? r : r + 1;
    }

    Rational::Rational(Int num, Int den)
    {
        if (den == 0)
            throw DomainError("rational with zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        Int g = std::gcd(num, den);
        _num = num / g;
        _den = den / g;
    }

    auto Rational::to_string() const -> std::string
    {
        if (_den == 1)
            return std::to_string(_num);
        return std::to_string(_num) + "/" + std::to_string(_den);
    }

    auto Rational::to_decimal(int places) const -> std::string
    {
        std::string out;
        Int whole = _num / _den;
        Int rem = _num % _den;
        if (_num < 0 && whole == 0)
            out += "-";
        out += std::to_string(whole);
        if (rem == 0)
            return out;
        if (rem < 0)
            rem = -rem;
        out += ".";
        for (int i = 0; i < places && rem != 0; ++i) {
            rem = checked_mul(rem, 10);
            out += static_cast<char>('0' + rem / _den);
            rem %= _den;
        }
        return out;
    }

    auto operator+(const Rational & a, const Rational & b) -> Rational
    {
        return Rational(checked_add(checked_mul(a._num, b._den), checked_mul(b._num, a._den)), checked_mul(a._den, b._den));
    }

    auto operator-(const Rational & a, const Rational & b) -> Rational
    {
        return Rational(checked_sub(checked_mul(a._num, b._den), checked_mul(b._num, a._den)), checked_mul(a._den, b._den));
    }

    auto operator*(const Rational & a, const Rational & b) -> Rational
    {
        return Rational(checked_mul(a._num, b._num), checked_mul(a._den, b._den));
    }

    auto operator/(const Rational & a, const Rational & b) -> Rational
    {
        if (b._num == 0)
            throw DomainError("rational division by zero");
        return Rational(checked_mul(a._num, b._den), checked_mul(a._den, b._num));
    }

    auto operator<=>(const Rational & a, const Rational & b) -> std::strong_ordering
    {
        Wide lhs = static_cast<Wide>(a._num) * b._den;
        Wide rhs = static_cast<Wide>(b._num) * a._den;
        return lhs <=> rhs;
    }
}
