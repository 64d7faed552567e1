#ifndef MIXQUANT_TOOLS_CLI_HPP
#define MIXQUANT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mixquant::cli {

/// Runs one command line (without the program name) and returns the process exit code:
/// 0 success, 1 a reproduce/oracle-check failure, 2 invalid input, 3 solver failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0.25" or "51/500".
double parse_number(const std::string& text);

/// "lo:hi:step", "lo:hi" (step 1) or a single value, inclusive of hi.
std::vector<double> parse_range(const std::string& text);

}  // namespace mixquant::cli

#endif
