#ifndef NUAR_GUARD_CLI_HH
#define NUAR_GUARD_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace nuar
{
    /// 0 for found/holds/complete, 1 for not-found/violated/incomplete,
    /// 2 for anything else (errors).
    [[nodiscard]] auto exit_code_for(const std::string & status) -> int;

    /// Runs one command line (without the program name), writing the report
    /// to out and diagnostics to err. Returns the exit code.
    auto run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
