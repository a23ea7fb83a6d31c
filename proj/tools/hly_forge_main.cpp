#include <cstdio>
#include <string>
#include <vector>

#include "hly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    hly::CliResult result = hly::run_cli(args);
    std::fputs(result.out.c_str(), stdout);
    return result.exit_code;
}
