#pragma once

#include <string>
#include <vector>

namespace kwall {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// The whole command-line front end, callable in-process for tests.
// args excludes the program name. Exit codes: 0 success, 1 domain errors,
// 2 usage errors.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace kwall
