#include <doctest.h>

#include <pgq/scan.hpp>

#include <json.hpp>

#include <sstream>

using namespace pgq;

TEST_SUITE("scan")
{
    TEST_CASE("check_one classifications")
    {
        CHECK(check_one({56, 4}).classification == Classification::ruled_out_by_new_bound);
        CHECK(check_one({10, 2}).classification == Classification::pgq_possible_only);
        CHECK(check_one({2, 2}).classification == Classification::gq_possible);
        CHECK(check_one({3, 1}).classification == Classification::trivial);
        CHECK(check_one({11, 2}).classification == Classification::ruled_out_by_prior_conditions);
        // beyond Neumaier
        CHECK(check_one({13, 2}).classification == Classification::ruled_out_by_prior_conditions);
        // Krein: t = 5 > s^2 = 4
        CHECK(check_one({2, 5}).verdicts[2].status == Status::fail);
    }

    TEST_CASE("verdicts come in the fixed order")
    {
        auto r = check_one({56, 4});
        std::vector<std::string> names;
        for (const auto & v : r.verdicts)
            names.push_back(v.name);
        CHECK(names == std::vector<std::string>{"consistency", "trivial", "krein", "divisibility", "neumaier", "gq-duality", "four-term-bound"});

        auto trivial = check_one({4, 1});
        CHECK(trivial.verdicts.size() == 7);
        CHECK(trivial.verdicts[6].status == Status::not_applicable);
    }

    TEST_CASE("scan row counts for small ranges")
    {
        CHECK(scan(ScanRange{2, 3}).empty());
        auto five = scan(ScanRange{5, 5});
        REQUIRE(five.size() == 1);
        CHECK(five[0].params == GQParams{95, 5});
        CHECK(five[0].derived == SrgParams{45696, 570, 94, 6});
        CHECK_THROWS_AS(ScanRange(1, 4), DomainError);
        CHECK_THROWS_AS(ScanRange(5, 4), DomainError);
    }

    TEST_CASE("parallel scan equals the serial reference byte for byte")
    {
        for (auto [lo, hi] : std::vector<std::pair<Int, Int>>{{2, 10}, {2, 20}, {7, 13}}) {
            std::ostringstream a, b, c, d;
            emit_json(a, scan({lo, hi}));
            emit_json(b, scan_serial({lo, hi}));
            CHECK(a.str() == b.str());
            emit_csv(c, scan({lo, hi}));
            emit_csv(d, scan({lo, hi}));
            CHECK(c.str() == d.str());
        }
    }

    TEST_CASE("every emitted row satisfies the defining conditions")
    {
        for (const auto & r : scan({2, 20})) {
            Int s = r.params.s(), t = r.params.t();
            CAPTURE(s);
            CAPTURE(t);
            REQUIRE((s * (s + 1) * t * (t + 1)) % (s + t) == 0);
            REQUIRE(s <= t * (t + 1) * (t + 2) / 2);
            REQUIRE(s > t * t);
            REQUIRE(t <= s * s);
            REQUIRE(s > t * ((8 * t + 3) / 3));
            REQUIRE(Rational(s) > optimal_four_term_bound(t).bound);
        }
    }

    TEST_CASE("enlarging t_max never removes rows")
    {
        auto small = scan({2, 8});
        auto large = scan({2, 14});
        REQUIRE(large.size() >= small.size());
        for (std::size_t i = 0; i < small.size(); ++i)
            CHECK(small[i].params == large[i].params);
    }

    TEST_CASE("csv and json emitters")
    {
        std::ostringstream empty;
        emit_csv(empty, {});
        CHECK(empty.str() == "s,t,v,k,lambda,mu\n");

        std::ostringstream one;
        emit_json(one, {check_one({56, 4})});
        auto j = nlohmann::json::parse(one.str());
        REQUIRE(j.is_array());
        REQUIRE(j.size() == 1);
        CHECK(j[0]["s"] == 56);
        CHECK(j[0]["lambda"] == 55);
        CHECK(j[0]["classification"] == "ruled-out-by-new-bound");
        REQUIRE(j[0]["verdicts"].size() == 7);
        for (const auto & v : j[0]["verdicts"]) {
            CHECK(v.contains("name"));
            CHECK(v.contains("witness"));
            auto verdict = v["verdict"].get<std::string>();
            CHECK((verdict == "pass" || verdict == "fail" || verdict == "na"));
        }
        CHECK(j[0]["verdicts"][6]["verdict"] == "fail");
    }
}
