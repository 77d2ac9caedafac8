#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ggm {

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// Parses a full field as a double; `where` prefixes the error message.
double parse_double(std::string_view field, const std::string& where);

std::vector<std::string_view> split_fields(std::string_view line, char sep);

} // namespace ggm
