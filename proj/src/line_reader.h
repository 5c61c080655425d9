#ifndef KATHA_SRC_LINE_READER_H_
#define KATHA_SRC_LINE_READER_H_

#include <cstddef>
#include <string_view>
#include <vector>

namespace katha::internal {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

// Splits on LF; a trailing CR is stripped from each line.
inline std::vector<Line> SplitLines(std::string_view content) {
  std::vector<Line> lines;
  std::size_t number = 1;
  while (!content.empty()) {
    const std::size_t nl = content.find('\n');
    std::string_view line = content.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    if (nl == std::string_view::npos) break;
    content.remove_prefix(nl + 1);
  }
  return lines;
}

inline std::vector<std::string_view> SplitFields(std::string_view line,
                                                 char sep) {
  std::vector<std::string_view> fields;
  while (true) {
    const std::size_t pos = line.find(sep);
    fields.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return fields;
}

inline std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

inline std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace katha::internal

#endif  // KATHA_SRC_LINE_READER_H_
