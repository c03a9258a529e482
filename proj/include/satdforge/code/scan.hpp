#pragma once

#include <cstddef>
#include <vector>

#include "satdforge/code/language.hpp"
#include "satdforge/code/lexer.hpp"

namespace satdforge::code::detail {

// Byte-offset region of a comment or string literal found while scanning.
struct Region {
  enum class Kind { LineComment, BlockComment, DocString, StringLit };
  Kind kind;
  std::size_t begin = 0;  // inclusive byte offset
  std::size_t end = 0;    // exclusive byte offset
  int start_line = 1;
  int end_line = 1;
};

struct ScanResult {
  std::vector<Token> tokens;
  std::vector<Region> regions;
};

ScanResult scan_source(std::string_view source, Language lang);

}  // namespace satdforge::code::detail
