#include "slideocam/format.hpp"

#include <charconv>
#include <cmath>

#include "slideocam/error.hpp"

namespace slideocam {

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
    if (value == 0.0) value = 0.0; // drop the sign of -0
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    return std::string(buf, end);
}

double parse_number(std::string_view text)
{
    if (text == "nan") return std::nan("");
    if (text == "inf") return HUGE_VAL;
    if (text == "-inf") return -HUGE_VAL;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw Error(Errc::InvalidArgument, "not a number: '" + std::string(text) + "'");
    }
    return value;
}

void write_csv_row(std::ostream& out, std::initializer_list<std::string_view> fields)
{
    bool first = true;
    for (auto field : fields) {
        if (!first) out << ',';
        out << field;
        first = false;
    }
    out << '\n';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) out << ',';
        out << fields[i];
    }
    out << '\n';
}

std::vector<std::string> split_csv_line(std::string_view line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

} // namespace slideocam
