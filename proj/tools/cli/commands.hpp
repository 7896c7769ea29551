#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fewapsp::cli {

// Entry point shared by the executable and the tests. Returns the process
// exit code (see ExitCode).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fewapsp::cli
