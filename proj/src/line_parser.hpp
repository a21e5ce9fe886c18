#pragma once

#include <pgq/errors.hpp>

#include <istream>
#include <string>
#include <vector>

namespace pgq::detail
{
    inline void next_line(std::istream & in, std::string & line, long long lineno, const char * format)
    {
        if (! std::getline(in, line))
            throw ParseError(std::string(format) + ": unexpected end of input at line " + std::to_string(lineno));
    }

    /// Nonnegative decimal integers separated by single spaces, nothing else.
    inline auto parse_uints(const std::string & line, long long lineno, const char * format) -> std::vector<long long>
    {
        auto fail = [&](const std::string & why) {
            throw ParseError(std::string(format) + ": line " + std::to_string(lineno) + ": " + why);
        };
        std::vector<long long> out;
        std::size_t i = 0;
        while (i < line.size()) {
            if (! out.empty()) {
                if (line[i] != ' ')
                    fail("expected single space separator");
                ++i;
            }
            std::size_t start = i;
            long long value = 0;
            while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
                if (value > 1'000'000'000'000LL)
                    fail("number too large");
                value = value * 10 + (line[i] - '0');
                ++i;
            }
            if (i == start)
                fail("expected a nonnegative integer");
            out.push_back(value);
        }
        return out;
    }

    inline auto parse_exact(const std::string & line, std::size_t count, long long lineno, const char * format) -> std::vector<long long>
    {
        auto out = parse_uints(line, lineno, format);
        if (out.size() != count)
            throw ParseError(std::string(format) + ": line " + std::to_string(lineno) + ": expected " + std::to_string(count) +
                " integers, got " + std::to_string(out.size()));
        return out;
    }

    /// Anything after the declared records other than blank lines is an error.
    inline void expect_end(std::istream & in, const char * format)
    {
        std::string line;
        while (std::getline(in, line))
            if (! line.empty())
                throw ParseError(std::string(format) + ": trailing content '" + line + "'");
    }
}
