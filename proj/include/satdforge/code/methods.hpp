#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "satdforge/code/comments.hpp"
#include "satdforge/code/language.hpp"

namespace satdforge::code {

struct MethodSpan {
  std::string name;
  int signature_line = 1;  // line carrying the method name
  int start_line = 1;      // first decorator/annotation line, else signature
  int end_line = 1;
  std::string text;        // source lines [start_line, end_line]
  int param_count = 0;

  bool contains(int line) const {
    return start_line <= line && line <= end_line;
  }
};

struct ParseAnomaly : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BraceImbalance : ParseAnomaly {
  using ParseAnomaly::ParseAnomaly;
};
struct IndentationAnomaly : ParseAnomaly {
  using ParseAnomaly::ParseAnomaly;
};

// Lexical method detection: Java by signature pattern plus brace matching,
// Python by def blocks and indentation. Throws BraceImbalance or
// IndentationAnomaly on files that defeat the scan; callers skip those files.
std::vector<MethodSpan> extract_methods(std::string_view source, Language lang);

// The innermost method whose span contains `line`; otherwise the method whose
// start is separated from the comment block ending at `line` only by blank
// lines, decorators or annotations; otherwise nullptr.
const MethodSpan* containing_method(int line,
                                    const std::vector<MethodSpan>& methods,
                                    const std::vector<CommentSpan>& comments,
                                    const std::vector<std::string>& source_lines);

}  // namespace satdforge::code
