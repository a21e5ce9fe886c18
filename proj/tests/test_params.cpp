#include <doctest.h>

#include <pgq/params.hpp>

#include <limits>

using namespace pgq;

TEST_SUITE("params")
{
    TEST_CASE("derive_srg on known parameter sets")
    {
        CHECK(derive_srg({2, 2}) == SrgParams{15, 6, 1, 3});
        CHECK(derive_srg({10, 2}) == SrgParams{231, 30, 9, 3});
        CHECK(derive_srg({56, 4}) == SrgParams{12825, 280, 55, 5});
        CHECK(derive_srg({1, 1}) == SrgParams{4, 2, 0, 2});
        CHECK(GQParams{1, 1}.trivial());
        CHECK(GQParams{3, 1}.trivial());
        CHECK_FALSE(GQParams{2, 2}.trivial());
    }

    TEST_CASE("derive_srg fails loudly on overflow")
    {
        Int big = Int{1} << 32;
        CHECK_THROWS_AS(derive_srg({big, big}), OverflowError);
        CHECK_THROWS_AS(derive_srg({std::numeric_limits<Int>::max(), 1}), OverflowError);
        CHECK_THROWS_AS(multiplicity_integrality({big, big}), OverflowError);
    }

    TEST_CASE("GQParams rejects s or t below 1")
    {
        CHECK_THROWS_AS(GQParams(0, 2), DomainError);
        CHECK_THROWS_AS(GQParams(2, 0), DomainError);
    }

    TEST_CASE("identify_gq_form")
    {
        auto p = identify_gq_form({15, 6, 1, 3});
        REQUIRE(p);
        CHECK(*p == GQParams{2, 2});

        auto rook = identify_gq_form({16, 6, 2, 2});
        REQUIRE(rook);
        CHECK(*rook == GQParams{3, 1});

        // Petersen: s = 1, t = 0
        CHECK_FALSE(identify_gq_form({10, 3, 0, 1}));
        // right lambda, mu but wrong v
        CHECK_FALSE(identify_gq_form({16, 6, 1, 3}));
        CHECK_THROWS_AS(identify_gq_form({5, 6, 1, 3}), DomainError);
    }

    TEST_CASE("multiplicity_integrality")
    {
        auto a = multiplicity_integrality({10, 2});
        CHECK(a.status == Status::pass);
        CHECK(a.witness == "660 = 12*55");

        auto b = multiplicity_integrality({56, 4});
        CHECK(b.status == Status::pass);
        CHECK(b.witness == "63840 = 60*1064");

        auto c = multiplicity_integrality({11, 2});
        CHECK(c.status == Status::fail);
        CHECK(c.witness == "792 = 13*60 + 12");

        CHECK(multiplicity_integrality({1, 5}).status == Status::not_applicable);
    }

    TEST_CASE("krein_check and gq_possible boundaries")
    {
        CHECK(krein_check({10, 2}).status == Status::pass);
        CHECK(krein_check({2, 4}).status == Status::pass);
        CHECK(krein_check({2, 5}).status == Status::fail);
        CHECK(krein_check({1, 5}).status == Status::not_applicable);

        CHECK(gq_possible({10, 2}).status == Status::fail);
        CHECK(gq_possible({4, 2}).status == Status::pass);
        CHECK(gq_possible({56, 4}).status == Status::fail);
        CHECK(gq_possible({3, 1}).status == Status::not_applicable);
    }

    TEST_CASE("spectrum of GQ(2,2)")
    {
        auto sp = spectrum_of({2, 2});
        CHECK(sp.theta_pos == 1);
        CHECK(sp.theta_neg == -3);
        CHECK(sp.mult_pos == Rational(9));
        CHECK(sp.mult_neg == Rational(5));
        // s = 11, t = 2: f = 792/13
        CHECK(spectrum_of({11, 2}).mult_pos == Rational(792, 13));
    }

    TEST_CASE("property: counting identity, round trip, spectrum for s, t in [1, 200]")
    {
        for (Int s = 1; s <= 200; ++s)
            for (Int t = 1; t <= 200; ++t) {
                GQParams p{s, t};
                auto q = derive_srg(p);
                REQUIRE(q.counting_identity_holds());
                REQUIRE(q.well_formed());
                auto back = identify_gq_form(q);
                REQUIRE(back);
                REQUIRE(*back == p);

                auto sp = spectrum_of(p);
                REQUIRE(sp.mult_pos + sp.mult_neg == Rational(q.v - 1));
                // trace of A is zero
                REQUIRE(Rational(q.k) + sp.mult_pos * Rational(sp.theta_pos) + sp.mult_neg * Rational(sp.theta_neg) == Rational(0));
                if (s >= 2 && t >= 2)
                    REQUIRE((multiplicity_integrality(p).status == Status::pass) == sp.mult_pos.is_integer());
            }
    }
}
