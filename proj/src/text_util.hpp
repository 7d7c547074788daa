// Small string and file helpers shared across the library.

#ifndef SENTREE_TEXT_UTIL_HPP
#define SENTREE_TEXT_UTIL_HPP

#include <string>
#include <string_view>
#include <vector>

namespace sentree::util {

// ASCII-only lowercasing; non-ASCII bytes pass through untouched.
std::string to_lower(std::string_view s);

// Splits on a single separator, keeping empty fields.
std::vector<std::string> split(std::string_view s, char sep);

std::string_view trim(std::string_view s);

bool is_blank(std::string_view s);

// Parses a base-10 integer occupying the whole string. Returns false on
// sign-less garbage, trailing characters, or overflow.
bool parse_int(std::string_view s, long& out);

// Shortest decimal representation that reads back to the same double.
std::string format_double(double v);

// Fixed-point with the given number of decimals (metric display).
std::string format_fixed(double v, int decimals);

std::string read_file(const std::string& path);    // throws std::runtime_error
void write_file(const std::string& path, std::string_view content);

}  // namespace sentree::util

#endif  // SENTREE_TEXT_UTIL_HPP
