#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace wlnn {

/// Formats a double with 17 significant digits ("%.17g"), enough to
/// round-trip the value exactly. All numeric file output goes through this
/// so that reruns produce byte-identical files.
inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<std::string> split_ws(const std::string& line);
std::vector<std::string> split_char(const std::string& s, char sep);

/// Strict double parse; throws IoError on garbage or trailing junk.
double parse_double(const std::string& tok);
long parse_long(const std::string& tok);

} // namespace wlnn
