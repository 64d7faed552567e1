#ifndef MIXQUANT_TOOLS_FORMAT_HPP
#define MIXQUANT_TOOLS_FORMAT_HPP

#include <cstdio>
#include <string>
#include <vector>

namespace mixquant::cli {

// All printed numbers carry 12 significant digits so output is byte-stable.
inline std::string fmt12(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline double round12(double x) { return std::stod(fmt12(x)); }

inline std::string fmt12_list(const std::vector<double>& v, const char* sep = ", ") {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + fmt12(v[i]);
    return s + "]";
}

}  // namespace mixquant::cli

#endif
