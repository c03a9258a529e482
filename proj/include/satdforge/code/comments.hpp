#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "satdforge/code/language.hpp"

namespace satdforge::code {

enum class CommentKind { Line, Block, Docstring };

struct CommentSpan {
  std::string text;  // raw text including markers
  CommentKind kind = CommentKind::Line;
  int start_line = 1;  // 1-based
  int end_line = 1;

  bool operator==(const CommentSpan&) const = default;
};

// All line comments, block comments and (Python) docstrings with exact line
// spans. String literals are never reported. Spans are non-overlapping and
// sorted by start_line; the scan is lexical and never fails.
std::vector<CommentSpan> extract_comments(std::string_view source,
                                          Language lang);

// The default debt keyword set: TODO, FIXME, HACK, XXX.
const std::vector<std::string>& default_satd_keywords();

// True iff the text contains a debt keyword as a case-insensitive whole word.
bool detect_satd(std::string_view comment_text);
bool detect_satd(std::string_view comment_text,
                 const std::vector<std::string>& keywords);

// Whitespace-separated word count after stripping comment delimiters
// (//, /* */, leading *, #, triple quotes). Debt keywords count as words.
int satd_word_count(std::string_view comment_text);

}  // namespace satdforge::code
