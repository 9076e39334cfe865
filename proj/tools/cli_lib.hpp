#ifndef GENEXP_CLI_LIB_HPP
#define GENEXP_CLI_LIB_HPP

// Library entry point behind the command line tool, so tests can drive the
// full argument-to-output path in process.

#include <string>
#include <vector>

namespace genexp {

struct CliResult {
    int exit_code = 0;
    std::string output;
};

// Runs one invocation; args excludes the program name.  Exit codes:
//   0 success
//   1 usage or internal error
//   2 malformed partition or weight text
//   3 rank or shape incompatibility
//   4 cutoff error (negative, or mismatched series cutoffs)
//   5 a verify suite found a counterexample
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace genexp

#endif
