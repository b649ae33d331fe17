#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace fa2::testing {

/// Minimal well-formedness scan: balanced tags, terminated declarations,
/// matched attribute quotes. Enough to validate renderer output in tests.
inline bool xml_well_formed(std::string_view text) {
  std::vector<std::string> stack;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') {
      ++i;
      continue;
    }
    if (text.compare(i, 2, "<?") == 0) {
      const auto end = text.find("?>", i);
      if (end == std::string_view::npos) return false;
      i = end + 2;
      continue;
    }
    const bool closing = text.compare(i, 2, "</") == 0;
    const std::size_t name_start = i + (closing ? 2 : 1);
    std::size_t j = name_start;
    while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                               text[j] == ':' || text[j] == '-' || text[j] == '_')) {
      ++j;
    }
    if (j == name_start) return false;
    const std::string name(text.substr(name_start, j - name_start));

    bool self_close = false;
    char quote = 0;
    while (j < text.size()) {
      const char c = text[j];
      if (quote != 0) {
        if (c == quote) quote = 0;
      } else if (c == '"' || c == '\'') {
        quote = c;
      } else if (c == '/' && j + 1 < text.size() && text[j + 1] == '>') {
        self_close = true;
      } else if (c == '>') {
        break;
      }
      ++j;
    }
    if (j >= text.size() || quote != 0) return false;

    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_close) {
      stack.push_back(name);
    }
    i = j + 1;
  }
  return stack.empty();
}

inline std::size_t count_elements(std::string_view text, std::string_view name) {
  const std::string open = "<" + std::string(name);
  std::size_t count = 0, pos = 0;
  while ((pos = text.find(open, pos)) != std::string_view::npos) {
    const std::size_t after = pos + open.size();
    const char next = after < text.size() ? text[after] : '\0';
    if (next == ' ' || next == '>' || next == '/' || next == '\t' || next == '\n') ++count;
    pos = after;
  }
  return count;
}

}  // namespace fa2::testing
