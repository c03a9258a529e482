#include "satdforge/code/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "satdforge/code/lexer.hpp"
#include "satdforge/code/scan.hpp"
#include "satdforge/util/strings.hpp"

namespace satdforge::code {

namespace {

bool import_line_start(const std::string& line, Language lang) {
  std::string t = util::lstrip(line);
  auto word_at_start = [&](std::string_view w) {
    if (t.rfind(w, 0) != 0) return false;
    char next = t.size() > w.size() ? t[w.size()] : '\0';
    return !(std::isalnum(static_cast<unsigned char>(next)) || next == '_');
  };
  if (lang == Language::Java) return word_at_start("import");
  return word_at_start("import") || word_at_start("from");
}

int bracket_delta(const std::string& line) {
  int delta = 0;
  for (char c : line) {
    if (c == '(' || c == '[' || c == '{') ++delta;
    if (c == ')' || c == ']' || c == '}') --delta;
  }
  return delta;
}

}  // namespace

std::string strip_icd(std::string_view method_text, Language lang) {
  std::string work(method_text);

  // Blank out comment and docstring regions; block comments become a single
  // space so adjacent code cannot fuse into new token sequences.
  detail::ScanResult scan = detail::scan_source(work, lang);
  std::set<int> touched_lines;
  for (auto it = scan.regions.rbegin(); it != scan.regions.rend(); ++it) {
    const auto& r = *it;
    if (r.kind == detail::Region::Kind::StringLit) continue;
    for (int l = r.start_line; l <= r.end_line; ++l) touched_lines.insert(l);
    // Multi-line regions keep their newlines so line numbering is stable;
    // single-line block comments become one space so the code around them
    // cannot fuse into a new token.
    std::string replacement;
    if (r.kind != detail::Region::Kind::LineComment) {
      auto newlines = static_cast<std::size_t>(
          std::count(work.begin() + static_cast<std::ptrdiff_t>(r.begin),
                     work.begin() + static_cast<std::ptrdiff_t>(r.end), '\n'));
      replacement = newlines ? std::string(newlines, '\n') : std::string(" ");
    }
    work.replace(r.begin, r.end - r.begin, replacement);
  }

  std::vector<std::string> lines = util::split_lines(work);
  std::vector<std::string> kept;
  kept.reserve(lines.size());
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string& line = lines[idx];
    int line_no = static_cast<int>(idx) + 1;
    if (import_line_start(line, lang)) {
      // Consume continuation lines of a bracketed or backslash-continued
      // import statement.
      int open = bracket_delta(line);
      bool backslash = !line.empty() && line.back() == '\\';
      while ((open > 0 || backslash) && idx + 1 < lines.size()) {
        ++idx;
        open += bracket_delta(lines[idx]);
        backslash = !lines[idx].empty() && lines[idx].back() == '\\';
      }
      continue;
    }
    if (touched_lines.count(line_no) && util::is_blank(line)) continue;
    kept.push_back(line);
  }

  std::string result = util::join_lines(kept);
  if (!method_text.empty() && method_text.back() == '\n') result += '\n';
  return result;
}

std::string canonicalize(std::string_view method_text, Language lang) {
  std::string stripped = strip_icd(method_text, lang);

  if (lang == Language::Java) {
    std::string out;
    out.reserve(stripped.size());
    for (char c : stripped) {
      if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\v' &&
          c != '\f')
        out.push_back(c);
    }
    return out;
  }

  std::vector<Token> tokens = lex_detailed(stripped, Language::Python);
  std::vector<std::string> lines;
  std::vector<std::string> buffer;
  int level = 0;
  auto flush = [&]() {
    if (buffer.empty()) return;
    lines.push_back(std::string(static_cast<std::size_t>(level) * 4, ' ') +
                    util::join(buffer, " "));
    buffer.clear();
  };
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Comment) continue;
    if (t.kind == TokenKind::Marker) {
      if (t.text == kNewlineMarker) {
        flush();
      } else if (t.text == kIndentMarker) {
        ++level;
      } else if (t.text == kDedentMarker) {
        level = std::max(0, level - 1);
      }
      continue;
    }
    buffer.push_back(t.text);
  }
  flush();
  return util::join_lines(lines);
}

}  // namespace satdforge::code
