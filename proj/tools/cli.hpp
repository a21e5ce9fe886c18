#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgq::cli
{
    enum ExitCode : int
    {
        ok = 0,
        usage_error = 1,
        input_error = 2,
        negative = 3 ///< ruled out, or a verification failed
    };

    /// Runs one invocation. args excludes the program name. Data goes to out, diagnostics to err;
    /// a FILE argument of "-" reads from in.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
