#pragma once

// Batch front end: parse JSON presentations, dispatch verifications and
// constructions, emit machine-readable reports on standard output.
//
// Exit codes: 0 verified/constructed, 1 identity failure (the report carries
// witnesses), 2 input error.  Reports are deterministic given the input.

#include <string>
#include <vector>

namespace hly {

struct CliResult {
    int exit_code = 0;
    std::string out;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace hly
