#ifndef PIPEDREAMS_CLI_HPP
#define PIPEDREAMS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pipedreams {

/// Command-line entry point. Exit codes: 0 success, 1 verification failure
/// found, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pipedreams

#endif
