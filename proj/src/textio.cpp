#include "wlnn/textio.hpp"

#include <cstdlib>
#include <sstream>

#include "wlnn/errors.hpp"

namespace wlnn {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_char(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& tok) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw IoError("bad numeric token '" + tok + "'");
    return v;
}

long parse_long(const std::string& tok) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw IoError("bad integer token '" + tok + "'");
    return v;
}

} // namespace wlnn
