#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace slideocam {

/// Shortest locale-independent rendering with 9 significant digits
/// ("nan", "inf", "-inf" for non-finite values).
std::string format_number(double value);

/// Inverse of format_number. Throws Error(InvalidArgument) on malformed text.
double parse_number(std::string_view text);

/// Writes `fields` joined by commas and terminated by '\n'.
void write_csv_row(std::ostream& out, std::initializer_list<std::string_view> fields);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Splits one CSV line on commas (no quoting; emitters never quote).
std::vector<std::string> split_csv_line(std::string_view line);

} // namespace slideocam
