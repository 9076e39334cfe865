#include <cstdio>
#include <string>
#include <vector>

#include "cli_lib.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const genexp::CliResult result = genexp::run_cli(args);
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
}
