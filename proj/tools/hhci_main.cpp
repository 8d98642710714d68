// hhci_main.cpp -- command-line entry point.

#include <iostream>

#include "hhci/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    hhci::CliResult r = hhci::run_cli(std::move(args));
    std::cout << r.output;
    return r.exit_code;
}
