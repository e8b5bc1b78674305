#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dgraceful
{
    inline constexpr const char * version = "0.3.0";

    /// Runs one command line (without the program name). Machine output goes to
    /// out as JSON; reports for failed verification go to err.
    /// Returns 0 on success, 1 when verification fails, 2 on usage errors.
    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
