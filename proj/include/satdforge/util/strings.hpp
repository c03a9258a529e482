#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace satdforge::util {

// Splits on '\n'; a trailing newline does not produce an extra empty line.
// '\r' before a newline is dropped so CRLF input behaves like LF input.
std::vector<std::string> split_lines(std::string_view text);

std::string join_lines(const std::vector<std::string>& lines);

std::string rstrip(std::string_view s);
std::string lstrip(std::string_view s);
std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

bool is_blank(std::string_view s);

// Whitespace-separated tokens, no empties.
std::vector<std::string> whitespace_tokens(std::string_view s);

// Indentation width of a line with tabs advancing to the next multiple of 8.
int indent_width(std::string_view line);

bool is_ascii(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace satdforge::util
