#include <doctest.h>

#include <pgq/rational.hpp>

#include <limits>

using namespace pgq;

TEST_SUITE("rational")
{
    TEST_CASE("normalisation and rendering")
    {
        CHECK(Rational(45, 2).to_string() == "45/2");
        CHECK(Rational(90, 4) == Rational(45, 2));
        CHECK(Rational(3, -6) == Rational(-1, 2));
        CHECK(Rational(45, 2).to_decimal() == "22.5");
        CHECK(Rational(1, 3).to_decimal(4) == "0.3333");
        CHECK(Rational(-1, 2).to_decimal() == "-0.5");
        CHECK(Rational(27).to_string() == "27");
        CHECK(Rational(-7, 2).floor() == -4);
        CHECK(Rational(7, 2).floor() == 3);
        CHECK_THROWS_AS(Rational(1, 0), DomainError);
    }

    TEST_CASE("comparison does not overflow")
    {
        Int big = std::numeric_limits<Int>::max();
        CHECK(Rational(big, 3) < Rational(big, 2));
        CHECK(Rational(big - 1, big) < Rational(1));
        CHECK_THROWS_AS(Rational(big) + Rational(1), OverflowError);
    }

    TEST_CASE("integer square roots")
    {
        for (Int n = 0; n < 5000; ++n) {
            Int r = isqrt(n);
            REQUIRE(r * r <= n);
            REQUIRE((r + 1) * (r + 1) > n);
            Int c = ceil_sqrt(n);
            REQUIRE(c * c >= n);
            REQUIRE((c == 0 || (c - 1) * (c - 1) < n));
        }
        CHECK(isqrt(std::numeric_limits<Int>::max()) == 3037000499);
    }
}
