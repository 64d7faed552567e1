#ifndef MIXQUANT_TOOLS_GOLDEN_HPP
#define MIXQUANT_TOOLS_GOLDEN_HPP

#include <string>
#include <vector>

namespace mixquant::cli {

struct GoldenRow {
    std::string group;
    std::string name;
    std::string expected;
    std::string actual;
    double tolerance = 0.0;
    double deviation = 0.0;  ///< largest absolute difference; 0 or 1 for integer rows
    bool pass = false;
};

const std::vector<std::string>& golden_groups();

/// Evaluates the tabulated reference values of `group` against the library.
std::vector<GoldenRow> golden_rows(const std::string& group);

/// Parses "a/b" or a decimal. A decimal's tolerance is half a unit in its last
/// printed place, never below 5e-7; a fraction is exact to 1e-12.
struct Reference {
    double value = 0.0;
    double tolerance = 0.0;
};
Reference parse_reference(const std::string& text);

}  // namespace mixquant::cli

#endif
