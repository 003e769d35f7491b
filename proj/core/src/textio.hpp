#pragma once

// Internal text formatting and file helpers. All artifact files are UTF-8
// with LF line endings; doubles carry 17 significant digits so values
// round-trip exactly and reruns are byte-identical.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

namespace footfall::detail {

inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

/// Splits on '\n', dropping a trailing empty piece.
std::vector<std::string> split_lines(const std::string& text);

/// Splits a CSV line on ','; empty fields preserved.
std::vector<std::string> split_csv(const std::string& line);

double parse_double(const std::string& s);     // throws ParseError
long long parse_int(const std::string& s);     // throws ParseError
std::uint64_t parse_uint(const std::string& s);

}  // namespace footfall::detail
