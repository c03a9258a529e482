#include "satdforge/code/methods.hpp"

#include <algorithm>
#include <unordered_set>

#include "satdforge/code/lexer.hpp"
#include "satdforge/code/scan.hpp"
#include "satdforge/util/strings.hpp"

namespace satdforge::code {

namespace {

const std::unordered_set<std::string>& java_control_words() {
  static const std::unordered_set<std::string> words = {
      "if",     "for",   "while",  "switch", "catch",  "synchronized",
      "return", "do",    "else",   "try",    "finally", "case",
      "throw",  "assert", "new",   "super",  "this"};
  return words;
}

std::string slice_text(const std::vector<std::string>& lines, int start_line,
                       int end_line) {
  std::vector<std::string> part(lines.begin() + (start_line - 1),
                                lines.begin() + end_line);
  return util::join_lines(part);
}

// Contiguous '@' lines directly above `line` extend a method span upward.
int annotation_start(const std::vector<std::string>& lines, int line) {
  int start = line;
  while (start > 1) {
    std::string above = util::trim(lines[start - 2]);
    if (!above.empty() && above[0] == '@')
      --start;
    else
      break;
  }
  return start;
}

std::vector<MethodSpan> extract_java_methods(
    std::string_view source, const std::vector<std::string>& lines) {
  std::vector<Token> all = lex_detailed(source, Language::Java);
  std::vector<const Token*> toks;
  toks.reserve(all.size());
  for (const auto& t : all)
    if (t.kind != TokenKind::Comment) toks.push_back(&t);

  auto text_at = [&](std::size_t k) -> const std::string& {
    static const std::string empty;
    return k < toks.size() ? toks[k]->text : empty;
  };
  auto is_symbol = [&](std::size_t k, std::string_view s) {
    return k < toks.size() && toks[k]->kind == TokenKind::Symbol &&
           toks[k]->text == s;
  };

  std::vector<MethodSpan> methods;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i]->kind != TokenKind::Word) continue;
    if (!is_symbol(i + 1, "(")) continue;
    if (java_control_words().count(toks[i]->text)) continue;
    if (i > 0) {
      const std::string& prev = text_at(i - 1);
      if (prev == "." || prev == "new" || prev == "record") continue;
    }

    // Balance the parameter list. Inside a declaration's parentheses the
    // angle brackets are always generics, so commas are counted only at
    // angle depth zero.
    std::size_t j = i + 1;
    int depth = 0;
    int angle = 0;
    int commas = 0;
    bool has_content = false;
    for (; j < toks.size(); ++j) {
      if (toks[j]->kind != TokenKind::Symbol) {
        if (depth == 1) has_content = true;
        continue;
      }
      const std::string& t = toks[j]->text;
      if (t == "(") {
        ++depth;
      } else if (t == ")") {
        --depth;
        if (depth == 0) break;
      } else if (t == "<") {
        ++angle;
      } else if (t == ">" || t == ">>" || t == ">>>") {
        angle = std::max(0, angle - static_cast<int>(t.size()));
      } else if (t == "," && depth == 1 && angle == 0) {
        ++commas;
      } else if (depth == 1) {
        has_content = true;
      }
    }
    if (j >= toks.size()) continue;

    // Optional throws clause, then an opening brace.
    std::size_t k = j + 1;
    if (text_at(k) == "throws") {
      ++k;
      while (k < toks.size() &&
             (toks[k]->kind == TokenKind::Word || is_symbol(k, ".") ||
              is_symbol(k, ",")))
        ++k;
    }
    if (!is_symbol(k, "{")) continue;

    // Find the matching closing brace, counting only symbol tokens.
    std::size_t b = k;
    int braces = 0;
    for (; b < toks.size(); ++b) {
      if (toks[b]->kind != TokenKind::Symbol) continue;
      if (toks[b]->text == "{") ++braces;
      if (toks[b]->text == "}") {
        --braces;
        if (braces == 0) break;
      }
    }
    if (b >= toks.size())
      throw BraceImbalance("unbalanced braces after method " + toks[i]->text);

    MethodSpan m;
    m.name = toks[i]->text;
    m.signature_line = toks[i]->line;
    m.start_line = annotation_start(lines, m.signature_line);
    m.end_line = toks[b]->end_line;
    m.param_count = has_content ? commas + 1 : 0;
    m.text = slice_text(lines, m.start_line, m.end_line);
    methods.push_back(std::move(m));
  }
  return methods;
}

std::vector<MethodSpan> extract_python_methods(
    std::string_view source, const std::vector<std::string>& lines) {
  std::vector<Token> all = lex_detailed(source, Language::Python);
  std::vector<const Token*> toks;
  toks.reserve(all.size());
  for (const auto& t : all)
    if (t.kind != TokenKind::Comment) toks.push_back(&t);

  auto statement_initial = [&](std::size_t k) {
    if (k == 0) return true;
    const Token* prev = toks[k - 1];
    return prev->kind == TokenKind::Marker;
  };

  std::vector<MethodSpan> methods;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i]->kind != TokenKind::Word || toks[i]->text != "def") continue;
    bool initial = statement_initial(i) ||
                   (i > 0 && toks[i - 1]->text == "async" &&
                    statement_initial(i - 1));
    if (!initial) continue;
    if (i + 1 >= toks.size() || toks[i + 1]->kind != TokenKind::Word) continue;

    MethodSpan m;
    m.name = toks[i + 1]->text;
    m.signature_line = toks[i]->line;

    // Locate the signature's closing colon at bracket depth zero.
    std::size_t j = i + 2;
    int depth = 0;
    int commas = 0;
    bool has_content = false;
    bool saw_params = false;
    for (; j < toks.size(); ++j) {
      if (toks[j]->kind == TokenKind::Marker) continue;
      const std::string& t = toks[j]->text;
      if (toks[j]->kind == TokenKind::Symbol) {
        if (t == "(" || t == "[" || t == "{") {
          if (t == "(" && depth == 0) saw_params = true;
          ++depth;
          continue;
        }
        if (t == ")" || t == "]" || t == "}") {
          --depth;
          continue;
        }
        if (t == ":" && depth == 0) break;
        if (t == "," && depth == 1) {
          ++commas;
          continue;
        }
      }
      if (depth == 1) has_content = true;
    }
    if (j >= toks.size()) continue;  // no colon: not a def we can bound
    m.param_count = saw_params && has_content ? commas + 1 : 0;

    // Body: either inline on the signature line or an indented block.
    std::size_t after = j + 1;
    if (after < toks.size() && toks[after]->kind != TokenKind::Marker) {
      // def f(): return 1  -- consume tokens until the logical line ends
      int end_line = toks[j]->end_line;
      std::size_t k = after;
      while (k < toks.size() && toks[k]->kind != TokenKind::Marker) {
        end_line = std::max(end_line, toks[k]->end_line);
        ++k;
      }
      m.end_line = end_line;
    } else {
      // Expect NEWLINE then INDENT.
      std::size_t k = after;
      while (k < toks.size() && toks[k]->kind == TokenKind::Marker &&
             toks[k]->text == kNewlineMarker)
        ++k;
      if (k >= toks.size() || toks[k]->kind != TokenKind::Marker ||
          toks[k]->text != kIndentMarker)
        throw IndentationAnomaly("def " + m.name + " at line " +
                                 std::to_string(m.signature_line) +
                                 " has no indented body");
      int bal = 0;
      int end_line = toks[j]->end_line;
      for (; k < toks.size(); ++k) {
        if (toks[k]->kind == TokenKind::Marker) {
          if (toks[k]->text == kIndentMarker) ++bal;
          if (toks[k]->text == kDedentMarker) {
            --bal;
            if (bal == 0) break;
          }
          continue;
        }
        end_line = std::max(end_line, toks[k]->end_line);
      }
      m.end_line = end_line;
    }

    // Trailing comment lines indented under the def are part of the body.
    int def_indent = util::indent_width(lines[m.signature_line - 1]);
    int l = m.end_line + 1;
    while (l <= static_cast<int>(lines.size())) {
      std::string t = util::trim(lines[l - 1]);
      if (t.empty()) {
        ++l;
        continue;
      }
      if (t[0] == '#' && util::indent_width(lines[l - 1]) > def_indent) {
        m.end_line = l;
        ++l;
        continue;
      }
      break;
    }

    m.start_line = annotation_start(lines, m.signature_line);
    m.text = slice_text(lines, m.start_line, m.end_line);
    methods.push_back(std::move(m));
  }
  return methods;
}

}  // namespace

std::vector<MethodSpan> extract_methods(std::string_view source,
                                        Language lang) {
  std::vector<std::string> lines = util::split_lines(source);
  std::vector<MethodSpan> methods =
      lang == Language::Java ? extract_java_methods(source, lines)
                             : extract_python_methods(source, lines);
  std::sort(methods.begin(), methods.end(),
            [](const MethodSpan& a, const MethodSpan& b) {
              if (a.start_line != b.start_line)
                return a.start_line < b.start_line;
              return a.end_line > b.end_line;
            });
  return methods;
}

namespace {

const MethodSpan* innermost_containing(int line,
                                       const std::vector<MethodSpan>& methods) {
  const MethodSpan* best = nullptr;
  for (const auto& m : methods) {
    if (!m.contains(line)) continue;
    if (!best || (m.end_line - m.start_line) < (best->end_line - best->start_line))
      best = &m;
  }
  return best;
}

// A comment span sits alone on its lines when the text before it is blank.
bool pure_comment_line(const CommentSpan& span,
                       const std::vector<std::string>& lines) {
  if (span.start_line < 1 ||
      span.start_line > static_cast<int>(lines.size()))
    return false;
  std::string lead = util::lstrip(lines[span.start_line - 1]);
  std::vector<std::string> span_lines = util::split_lines(span.text);
  if (span_lines.empty()) return false;
  return lead.rfind(util::lstrip(span_lines.front()), 0) == 0;
}

}  // namespace

const MethodSpan* containing_method(
    int line, const std::vector<MethodSpan>& methods,
    const std::vector<CommentSpan>& comments,
    const std::vector<std::string>& source_lines) {
  if (const MethodSpan* inside = innermost_containing(line, methods))
    return inside;

  // Find the comment block ending at (or spanning) the line.
  int block_end = line;
  for (const auto& span : comments) {
    if (span.start_line <= line && line <= span.end_line) {
      block_end = span.end_line;
      break;
    }
  }
  bool extended = true;
  while (extended) {
    extended = false;
    for (const auto& span : comments) {
      if (span.start_line == block_end + 1 &&
          pure_comment_line(span, source_lines)) {
        block_end = span.end_line;
        extended = true;
        break;
      }
    }
  }

  int max_line = static_cast<int>(source_lines.size());
  for (int l = block_end + 1; l <= max_line; ++l) {
    const MethodSpan* starting = nullptr;
    for (const auto& m : methods) {
      if (m.start_line != l) continue;
      if (!starting ||
          (m.end_line - m.start_line) < (starting->end_line - starting->start_line))
        starting = &m;
    }
    if (starting) return starting;
    std::string text = util::trim(source_lines[l - 1]);
    if (text.empty() || text[0] == '@') continue;
    return nullptr;
  }
  return nullptr;
}

}  // namespace satdforge::code
