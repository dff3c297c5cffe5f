#pragma once

// Internal CSV helpers shared by the table/series/points loaders.
// Not installed; the public surface is the typed load() functions.

#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "trigas/errors.hpp"

namespace trigas::csv {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

// Strict, locale-independent double parser. `where` names the row/field in
// error messages. Values like "inf"/"nan" parse as non-finite and are the
// caller's job to reject where invariants demand finite entries.
inline double parse_double(std::string_view field, const std::string& where) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    throw ParseError(where + ": cannot parse number '" + std::string(field) + "'");
  return value;
}

// Reads the next non-empty, non-comment line. Returns false at EOF.
inline bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    line = std::string(sv);
    return true;
  }
  return false;
}

}  // namespace trigas::csv
