#include "rtlgauge/extract.hpp"

#include <algorithm>
#include <cctype>

#include "rtlgauge/util.hpp"

namespace rtlgauge {

namespace {

struct Fence {
  std::string label;
  std::string body;
};

std::vector<Fence> fenced_blocks(std::string_view text) {
  std::vector<Fence> out;
  auto lines = split(text, '\n');
  size_t i = 0;
  while (i < lines.size()) {
    auto t = trim(lines[i]);
    if (starts_with(t, "```")) {
      Fence f;
      std::string label(trim(t.substr(3)));
      std::transform(label.begin(), label.end(), label.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      f.label = label;
      ++i;
      while (i < lines.size() && !starts_with(trim(lines[i]), "```")) {
        f.body += lines[i];
        f.body += '\n';
        ++i;
      }
      if (i < lines.size()) ++i;  // closing fence; unterminated runs to EOF
      out.push_back(std::move(f));
    } else {
      ++i;
    }
  }
  return out;
}

bool verilog_label(const std::string& label) {
  return label == "verilog" || label == "systemverilog" || label == "sv" || label == "v";
}

bool at_word_boundary(std::string_view s, size_t pos, size_t len) {
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  if (pos > 0 && is_word(s[pos - 1])) return false;
  if (pos + len < s.size() && is_word(s[pos + len])) return false;
  return true;
}

// Word occurrences outside Verilog comments and string literals, so a
// commented-out `module` decoy never anchors the span.
size_t find_word(std::string_view s, std::string_view word, size_t from, bool last) {
  size_t found = std::string_view::npos;
  size_t i = from;
  const size_t n = s.size();
  while (i < n) {
    char c = s[i];
    if (c == '/' && i + 1 < n && s[i + 1] == '/') {
      while (i < n && s[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && s[i + 1] == '*') {
      i += 2;
      while (i + 1 < n && !(s[i] == '*' && s[i + 1] == '/')) ++i;
      i = i + 1 < n ? i + 2 : n;
      continue;
    }
    if (c == '"') {
      ++i;
      while (i < n && s[i] != '"') i += (s[i] == '\\' && i + 1 < n) ? 2 : 1;
      if (i < n) ++i;
      continue;
    }
    if (c == word[0] && s.substr(i, word.size()) == word &&
        at_word_boundary(s, i, word.size())) {
      found = i;
      if (!last) return found;
      i += word.size();
      continue;
    }
    ++i;
  }
  return found;
}

}  // namespace

ExtractResult extract_code(std::string_view raw_response, const std::string& origin) {
  ExtractResult res;
  auto fences = fenced_blocks(raw_response);
  for (const auto& f : fences) {
    if (verilog_label(f.label) && !trim(f.body).empty()) {
      res.source = VerilogSource{f.body, origin};
      return res;
    }
  }
  for (const auto& f : fences) {
    if (!trim(f.body).empty()) {
      res.source = VerilogSource{f.body, origin};
      return res;
    }
  }
  size_t begin = find_word(raw_response, "module", 0, false);
  if (begin != std::string_view::npos) {
    size_t last_end = find_word(raw_response, "endmodule", begin, true);
    if (last_end != std::string_view::npos) {
      size_t end = last_end + 9;
      res.source = VerilogSource{std::string(raw_response.substr(begin, end - begin)), origin};
      return res;
    }
  }
  res.error = "no code found";
  return res;
}

}  // namespace rtlgauge
