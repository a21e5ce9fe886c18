#pragma once

#include <pgq/errors.hpp>

#include <cstdint>
#include <string>

namespace pgq
{
    using Int = std::int64_t;

    inline auto checked_add(Int a, Int b) -> Int
    {
        Int r;
        if (__builtin_add_overflow(a, b, &r))
            throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
        return r;
    }

    inline auto checked_sub(Int a, Int b) -> Int
    {
        Int r;
        if (__builtin_sub_overflow(a, b, &r))
            throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
        return r;
    }

    inline auto checked_mul(Int a, Int b) -> Int
    {
        Int r;
        if (__builtin_mul_overflow(a, b, &r))
            throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
        return r;
    }

    /// n choose 2, checked.
    inline auto choose2(Int n) -> Int
    {
        // one of n, n-1 is even
        return (n % 2 == 0) ? checked_mul(n / 2, n - 1) : checked_mul(n, (n - 1) / 2);
    }

    /// Largest r with r*r <= n.
    auto isqrt(Int n) -> Int;

    /// Smallest r with r*r >= n.
    auto ceil_sqrt(Int n) -> Int;

    /// Floor division for a positive divisor.
    inline auto floor_div(Int a, Int b) -> Int
    {
        Int q = a / b;
        if ((a % b != 0) && (a < 0))
            --q;
        return q;
    }
}
