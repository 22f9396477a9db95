#pragma once

#include <agrodevs/errors.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace agrodevs::detail {

inline std::string_view trim(std::string_view s) noexcept {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_fields(std::string_view line, char sep = ',') {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        out.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// A parsed CSV file: header fields plus data rows, each tagged with its
/// 1-based source line for error messages. Blank lines are skipped.
struct CsvTable {
    std::string source;
    std::vector<std::string> header;
    struct Row {
        std::size_t line;
        std::vector<std::string> fields;
    };
    std::vector<Row> rows;

    [[noreturn]] void fail(std::size_t line, const std::string& what) const {
        throw ConfigError(source + ":" + std::to_string(line) + ": " + what);
    }
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write to '" + path + "' failed");
}

inline CsvTable parse_csv(std::string_view text, std::string source, bool has_header = true) {
    CsvTable t;
    t.source = std::move(source);
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = trim(text.substr(start, end - start));
        ++line_no;
        if (!line.empty()) {
            if (has_header && t.header.empty())
                t.header = split_fields(line);
            else
                t.rows.push_back({line_no, split_fields(line)});
        }
        start = end + 1;
    }
    if (has_header && t.header.empty()) throw ConfigError(t.source + ": empty file, expected a header row");
    return t;
}

inline CsvTable load_csv(const std::string& path, bool has_header = true) {
    return parse_csv(read_file(path), path, has_header);
}

inline bool parse_double(std::string_view s, double& out) noexcept {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !s.empty();
}

/// Fixed six-decimal rendering used by every numeric CSV column.
inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace agrodevs::detail
