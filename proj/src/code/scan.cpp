#include "satdforge/code/scan.hpp"

#include <array>
#include <cctype>
#include <string_view>

namespace satdforge::code::detail {

namespace {

bool is_word_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_inline_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

bool is_any_space(char c) { return is_inline_space(c) || c == '\n'; }

constexpr std::array<std::string_view, 25> kJavaOps = {
    ">>>=", "<<=", ">>=", ">>>", "...", "->", "::", "++", "--",
    "&&",   "||",  "==",  "!=",  "<=",  ">=", "+=", "-=", "*=",
    "/=",   "%=",  "&=",  "|=",  "^=",  "<<", ">>"};

constexpr std::array<std::string_view, 24> kPythonOps = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "==",
    "!=",  "<=",  ">=",  "+=",  "-=",  "*=", "/=", "%=",
    "&=",  "|=",  "^=",  "@=",  "**",  "//", "<<", ">>"};

class Scanner {
 public:
  Scanner(std::string_view src, Language lang) : src_(src), lang_(lang) {}

  ScanResult run() {
    if (lang_ == Language::Java)
      scan_java();
    else
      scan_python();
    return {std::move(tokens_), std::move(regions_)};
  }

 private:
  std::string_view src_;
  Language lang_;
  std::vector<Token> tokens_;
  std::vector<Region> regions_;
  std::size_t i_ = 0;
  int line_ = 1;

  // ---- shared helpers ----

  char at(std::size_t k) const { return k < src_.size() ? src_[k] : '\0'; }

  int count_lines(std::size_t begin, std::size_t end) const {
    int n = 0;
    for (std::size_t k = begin; k < end; ++k)
      if (src_[k] == '\n') ++n;
    return n;
  }

  void push_token(std::string text, TokenKind kind, int line, int end_line) {
    tokens_.push_back({std::move(text), kind, line, end_line});
  }

  // Splits [begin, end) on whitespace; each piece becomes one token.
  void emit_pieces(std::size_t begin, std::size_t end, TokenKind kind,
                   int start_line) {
    int cur = start_line;
    std::size_t piece_start = std::string_view::npos;
    int piece_line = cur;
    for (std::size_t k = begin; k <= end; ++k) {
      char c = k < end ? src_[k] : ' ';
      if (is_any_space(c)) {
        if (piece_start != std::string_view::npos) {
          push_token(std::string(src_.substr(piece_start, k - piece_start)),
                     kind, piece_line, cur);
          piece_start = std::string_view::npos;
        }
        if (c == '\n') ++cur;
      } else if (piece_start == std::string_view::npos) {
        piece_start = k;
        piece_line = cur;
      }
    }
  }

  void add_region(Region::Kind kind, std::size_t begin, std::size_t end,
                  int start_line) {
    regions_.push_back(
        {kind, begin, end, start_line, start_line + count_lines(begin, end)});
  }

  std::size_t scan_number_end(std::size_t start) const {
    std::size_t k = start;
    bool seen_radix = false;
    while (k < src_.size()) {
      char c = src_[k];
      if (c == 'x' || c == 'X') {
        seen_radix = true;
        ++k;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
                 c == '_') {
        ++k;
      } else if ((c == '+' || c == '-') && k > start && !seen_radix &&
                 (src_[k - 1] == 'e' || src_[k - 1] == 'E')) {
        ++k;
      } else {
        break;
      }
    }
    return k;
  }

  template <std::size_t N>
  std::size_t match_op(const std::array<std::string_view, N>& ops) const {
    for (std::string_view op : ops)
      if (src_.compare(i_, op.size(), op) == 0) return op.size();
    return 1;
  }

  // ---- Java ----

  void scan_java() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
      } else if (is_inline_space(c)) {
        ++i_;
      } else if (c == '/' && at(i_ + 1) == '/') {
        scan_line_comment();
      } else if (c == '/' && at(i_ + 1) == '*') {
        scan_block_comment();
      } else if (c == '"') {
        scan_java_string();
      } else if (c == '\'') {
        scan_java_char();
      } else if (is_word_start(c)) {
        scan_word();
      } else if (is_digit(c) || (c == '.' && is_digit(at(i_ + 1)))) {
        scan_number();
      } else {
        std::size_t len = match_op(kJavaOps);
        push_token(std::string(src_.substr(i_, len)), TokenKind::Symbol, line_,
                   line_);
        i_ += len;
      }
    }
  }

  void scan_line_comment() {
    std::size_t end = src_.find('\n', i_);
    if (end == std::string_view::npos) end = src_.size();
    std::size_t text_end = end;
    if (text_end > i_ && src_[text_end - 1] == '\r') --text_end;
    add_region(Region::Kind::LineComment, i_, text_end, line_);
    emit_pieces(i_, text_end, TokenKind::Comment, line_);
    i_ = end;
  }

  void scan_block_comment() {
    std::size_t j = i_ + 2;
    while (j + 1 < src_.size() && !(src_[j] == '*' && src_[j + 1] == '/')) ++j;
    std::size_t end = j + 1 < src_.size() ? j + 2 : src_.size();
    add_region(Region::Kind::BlockComment, i_, end, line_);
    emit_pieces(i_, end, TokenKind::Comment, line_);
    line_ += count_lines(i_, end);
    i_ = end;
  }

  void scan_java_string() {
    std::size_t end;
    if (at(i_ + 1) == '"' && at(i_ + 2) == '"') {
      std::size_t j = i_ + 3;
      while (j < src_.size()) {
        if (src_[j] == '\\') {
          j += 2;
        } else if (src_[j] == '"' && at(j + 1) == '"' && at(j + 2) == '"') {
          j += 3;
          break;
        } else {
          ++j;
        }
      }
      end = j > src_.size() ? src_.size() : j;
    } else {
      std::size_t j = i_ + 1;
      while (j < src_.size() && src_[j] != '"' && src_[j] != '\n') {
        j += src_[j] == '\\' ? 2 : 1;
      }
      end = j < src_.size() && at(j) == '"' ? j + 1 : std::min(j, src_.size());
    }
    add_region(Region::Kind::StringLit, i_, end, line_);
    emit_pieces(i_, end, TokenKind::String, line_);
    line_ += count_lines(i_, end);
    i_ = end;
  }

  void scan_java_char() {
    std::size_t j = i_ + 1;
    while (j < src_.size() && src_[j] != '\'' && src_[j] != '\n') {
      j += src_[j] == '\\' ? 2 : 1;
    }
    std::size_t end = j < src_.size() && at(j) == '\'' ? j + 1 : std::min(j, src_.size());
    add_region(Region::Kind::StringLit, i_, end, line_);
    emit_pieces(i_, end, TokenKind::String, line_);
    i_ = end;
  }

  void scan_word() {
    std::size_t j = i_;
    while (j < src_.size() && is_word_char(src_[j])) ++j;
    push_token(std::string(src_.substr(i_, j - i_)), TokenKind::Word, line_,
               line_);
    i_ = j;
  }

  void scan_number() {
    std::size_t j = scan_number_end(i_);
    push_token(std::string(src_.substr(i_, j - i_)), TokenKind::Number, line_,
               line_);
    i_ = j;
  }

  // ---- Python ----

  std::vector<int> indents_;
  int bracket_depth_ = 0;
  bool at_line_start_ = true;
  bool logical_has_tokens_ = false;

  void emit_marker(std::string_view marker, int line) {
    push_token(std::string(marker), TokenKind::Marker, line, line);
  }

  void scan_python() {
    while (i_ < src_.size()) {
      if (at_line_start_ && bracket_depth_ == 0) {
        if (handle_line_start()) continue;
        if (i_ >= src_.size()) break;
      }
      char c = src_[i_];
      if (c == '\n') {
        ++line_;
        ++i_;
        if (bracket_depth_ == 0) {
          if (logical_has_tokens_) {
            emit_marker(kNewlineMarker, line_ - 1);
            logical_has_tokens_ = false;
          }
          at_line_start_ = true;
        }
      } else if (is_inline_space(c)) {
        ++i_;
      } else if (c == '\\' && at(i_ + 1) == '\n') {
        i_ += 2;
        ++line_;
      } else if (c == '#') {
        std::size_t end = src_.find('\n', i_);
        if (end == std::string_view::npos) end = src_.size();
        std::size_t text_end = end;
        if (text_end > i_ && src_[text_end - 1] == '\r') --text_end;
        add_region(Region::Kind::LineComment, i_, text_end, line_);
        emit_pieces(i_, text_end, TokenKind::Comment, line_);
        i_ = end;
      } else if (c == '"' || c == '\'') {
        scan_python_string(i_);
      } else if (is_word_start(c)) {
        std::size_t j = i_;
        while (j < src_.size() && is_word_char(src_[j])) ++j;
        std::string_view word = src_.substr(i_, j - i_);
        if (j < src_.size() && (src_[j] == '"' || src_[j] == '\'') &&
            is_string_prefix(word)) {
          scan_python_string(i_);
        } else {
          push_token(std::string(word), TokenKind::Word, line_, line_);
          logical_has_tokens_ = true;
          i_ = j;
        }
      } else if (is_digit(c) || (c == '.' && is_digit(at(i_ + 1)))) {
        scan_number();
        logical_has_tokens_ = true;
      } else {
        if (c == '(' || c == '[' || c == '{') ++bracket_depth_;
        if ((c == ')' || c == ']' || c == '}') && bracket_depth_ > 0)
          --bracket_depth_;
        std::size_t len = match_op(kPythonOps);
        push_token(std::string(src_.substr(i_, len)), TokenKind::Symbol, line_,
                   line_);
        logical_has_tokens_ = true;
        i_ += len;
      }
    }
    if (logical_has_tokens_) {
      emit_marker(kNewlineMarker, line_);
      logical_has_tokens_ = false;
    }
    while (indents_.size() > 1) {
      indents_.pop_back();
      emit_marker(kDedentMarker, line_);
    }
  }

  // Returns true if the caller should restart the loop (blank line skipped).
  bool handle_line_start() {
    std::size_t j = i_;
    int width = 0;
    while (j < src_.size() && (src_[j] == ' ' || src_[j] == '\t')) {
      width = src_[j] == '\t' ? (width / 8 + 1) * 8 : width + 1;
      ++j;
    }
    if (j >= src_.size()) {
      i_ = j;
      return true;
    }
    char c = src_[j];
    if (c == '\n' || c == '\r') {
      // blank line: no structural effect
      i_ = j;
      at_line_start_ = false;
      return true;
    }
    if (c == '#') {
      // comment-only line: no structural effect either
      i_ = j;
      at_line_start_ = false;
      return true;
    }
    if (indents_.empty()) {
      indents_.push_back(width);  // first logical line sets the baseline
    } else if (width > indents_.back()) {
      indents_.push_back(width);
      emit_marker(kIndentMarker, line_);
    } else {
      while (indents_.size() > 1 && width < indents_.back()) {
        indents_.pop_back();
        emit_marker(kDedentMarker, line_);
      }
      // An unmatched level is tolerated and treated as the current one.
    }
    at_line_start_ = false;
    i_ = j;
    return false;
  }

  static bool is_string_prefix(std::string_view word) {
    if (word.empty() || word.size() > 2) return false;
    for (char c : word) {
      char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (l != 'r' && l != 'b' && l != 'u' && l != 'f') return false;
    }
    return true;
  }

  void scan_python_string(std::size_t start) {
    std::size_t q = start;
    while (q < src_.size() && src_[q] != '"' && src_[q] != '\'') ++q;
    char quote = src_[q];
    bool triple = at(q + 1) == quote && at(q + 2) == quote;
    bool statement_initial =
        !logical_has_tokens_ && bracket_depth_ == 0;
    std::size_t end;
    if (triple) {
      std::size_t j = q + 3;
      while (j < src_.size()) {
        if (src_[j] == '\\') {
          j += 2;
        } else if (src_[j] == quote && at(j + 1) == quote &&
                   at(j + 2) == quote) {
          j += 3;
          break;
        } else {
          ++j;
        }
      }
      end = std::min(j, src_.size());
    } else {
      std::size_t j = q + 1;
      while (j < src_.size() && src_[j] != quote && src_[j] != '\n') {
        j += src_[j] == '\\' ? 2 : 1;
      }
      end = j < src_.size() && at(j) == quote ? j + 1 : std::min(j, src_.size());
    }
    bool docstring = false;
    if (statement_initial) {
      std::size_t k = end;
      while (k < src_.size() && is_inline_space(src_[k])) ++k;
      docstring = k >= src_.size() || src_[k] == '\n';
    }
    add_region(docstring ? Region::Kind::DocString : Region::Kind::StringLit,
               start, end, line_);
    emit_pieces(start, end, TokenKind::String, line_);
    line_ += count_lines(start, end);
    logical_has_tokens_ = true;
    i_ = end;
  }
};

}  // namespace

ScanResult scan_source(std::string_view source, Language lang) {
  return Scanner(source, lang).run();
}

}  // namespace satdforge::code::detail
