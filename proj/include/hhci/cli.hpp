// cli.hpp -- the command-line surface, exposed as a library call so tests can
// drive it in-process.

#ifndef HHCI_CLI_HPP
#define HHCI_CLI_HPP

#include <string>
#include <vector>

namespace hhci {

struct CliResult {
    int exit_code;       // 0 success, 2 input error, 3 precondition failure
    std::string output;  // JSON on stdout (or help text)
};

// args excludes the program name
CliResult run_cli(std::vector<std::string> args);

}  // namespace hhci

#endif
