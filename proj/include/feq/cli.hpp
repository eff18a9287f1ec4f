#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace feq::cli {

enum ExitCode : int {
    ok = 0,
    usage = 1,
    validation = 2,    // shape, PENLP, coverage, parameter errors
    parse = 3,         // expression / interval text
    out_of_domain = 4, // query outside I_max, or y0 undefined at a mapped point
    internal = 5,
};

/// Runs one command line. args[0] is the program name. Standard output only
/// receives the command's CSV/report, and only on success.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace feq::cli
