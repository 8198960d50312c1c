#include "fsdist/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace fsdist {
namespace csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); i++) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

std::string format_bool(bool v) { return v ? "true" : "false"; }

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("parse_bool: expected 'true' or 'false', got '" + s + "'");
}

}  // namespace csv
}  // namespace fsdist
