#include "oracles.hpp"

#include <doctest.h>

#include <pgq/graph.hpp>
#include <pgq/incidence.hpp>

#include <random>
#include <sstream>

using namespace pgq;

namespace
{
    auto parse_graph(const std::string & text) -> Graph
    {
        std::istringstream in(text);
        return read_pgqgraph(in);
    }

    auto write(const Graph & g) -> std::string
    {
        std::ostringstream out;
        write_pgqgraph(out, g);
        return out.str();
    }

    auto parse_inc(const std::string & text) -> IncidenceStructure
    {
        std::istringstream in(text);
        return read_pgqinc(in);
    }
}

TEST_SUITE("formats")
{
    TEST_CASE("pgqgraph canonical output")
    {
        std::vector<Edge> e{{1, 2}, {0, 2}};
        CHECK(write(Graph(3, e)) == "pgqgraph 1\n3 2\n0 2\n1 2\n");
        CHECK(write(Graph(0, std::vector<Edge>{})) == "pgqgraph 1\n0 0\n");
    }

    TEST_CASE("pgqgraph accepts unsorted edges and round-trips to the sorted form")
    {
        auto g = parse_graph("pgqgraph 1\n4 3\n2 3\n0 1\n1 3\n");
        CHECK(write(g) == "pgqgraph 1\n4 3\n0 1\n1 3\n2 3\n");
        CHECK(parse_graph(write(g)) == g);
    }

    TEST_CASE("property: write(read(write(g))) == write(g) on random graphs")
    {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            auto g = oracle::random_graph(rng, trial % 40, 0.3);
            auto text = write(g);
            auto back = parse_graph(text);
            REQUIRE(back == g);
            REQUIRE(write(back) == text);
        }
    }

    TEST_CASE("pgqgraph rejects malformed input")
    {
        for (const char * bad : {
                 "",
                 "pgqgraph 2\n1 0\n",
                 "pgqgraph 1\n",
                 "pgqgraph 1\n3\n",
                 "pgqgraph 1\n3 1\n",              // missing edge
                 "pgqgraph 1\n3 1\n0 3\n",         // out of range
                 "pgqgraph 1\n3 1\n1 0\n",         // u > v
                 "pgqgraph 1\n3 1\n1 1\n",         // loop
                 "pgqgraph 1\n3 2\n0 1\n0 1\n",    // duplicate
                 "pgqgraph 1\n3 1\n0  1\n",        // double space
                 "pgqgraph 1\n3 1\n0 1 2\n",       // extra field
                 "pgqgraph 1\n3 1\n0 -1\n",
                 "pgqgraph 1\n3 1\n0 1\n1 2\n",    // trailing record
                 "pgqgraph 1\n3 1\n0 x\n",
             }) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse_graph(bad), ParseError);
        }
    }

    TEST_CASE("pgqinc round trip")
    {
        auto inc = *extract_gq(gen_kneser_6_2(), {2, 2}).gq;
        std::ostringstream out;
        write_pgqinc(out, inc);
        auto text = out.str();
        CHECK(text.starts_with("pgqinc 1\n15 15 2 2\n"));
        auto back = parse_inc(text);
        CHECK(back.lines() == inc.lines());
        CHECK(back.points() == 15);
        std::ostringstream again;
        write_pgqinc(again, back);
        CHECK(again.str() == text);
    }

    TEST_CASE("pgqinc rejects malformed input")
    {
        for (const char * bad : {
                 "pgqinc 2\n",
                 "pgqinc 1\n3 1 1\n",
                 "pgqinc 1\n3 1 1 1\n",          // missing line
                 "pgqinc 1\n3 1 1 1\n1 0\n",     // not increasing
                 "pgqinc 1\n3 1 1 1\n0 3\n",     // out of range
                 "pgqinc 1\n3 1 1 1\n\n",        // empty line
                 "pgqinc 1\n3 1 0 1\n0 1\n",     // s = 0
                 "pgqinc 1\n3 1 1 1\n0 1\n0 2\n",
             }) {
            CAPTURE(bad);
            CHECK_THROWS_AS(parse_inc(bad), ParseError);
        }
    }
}
