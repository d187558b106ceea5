#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hestonlab {

// Shortest form that still round-trips a double (17 significant digits).
std::string format_double(double value);

// Whole-string parse; surrounding blanks are ignored.
std::optional<double> parse_double(std::string_view text) noexcept;
std::optional<long long> parse_integer(std::string_view text) noexcept;

std::string_view trim(std::string_view text) noexcept;
std::vector<std::string_view> split(std::string_view text, char sep);

}  // namespace hestonlab
