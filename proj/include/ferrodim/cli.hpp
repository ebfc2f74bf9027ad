#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ferrodim::cli
{
    enum ExitCode : int
    {
        ok = 0,
        check_failed = 1,
        usage_error = 2,
        budget_exceeded = 3
    };

    /// Runs one command line; args excludes the program name. Input `-` reads from in.
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}
