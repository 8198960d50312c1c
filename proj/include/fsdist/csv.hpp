#pragma once

#include <string>
#include <vector>

namespace fsdist {
namespace csv {

/// Shortest decimal form that round-trips a double (printf %.17g semantics,
/// so repeated serialize/parse cycles are byte-stable).
std::string format_double(double v);

/// Render one row; fields are joined with commas, no quoting (callers must
/// not put commas or newlines inside fields).
std::string join_row(const std::vector<std::string>& fields);

/// Split one row on commas. Inverse of join_row for comma-free fields.
std::vector<std::string> split_row(const std::string& line);

std::string format_bool(bool v);
bool parse_bool(const std::string& s);

}  // namespace csv
}  // namespace fsdist
