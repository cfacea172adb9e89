#pragma once

#include <string_view>
#include <vector>

namespace iocr {

// Splits on '\n' and strips a trailing '\r' per line. A terminal newline does
// not produce an empty trailing element.
std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim(std::string_view s);

// ASCII [A-Za-z0-9] count; used by the garbage-line filter.
std::size_t count_alnum(std::string_view s);

std::string ascii_fold(std::string_view s);

std::string collapse_spaces(std::string_view s);

}  // namespace iocr
