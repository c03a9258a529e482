#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "satdforge/code/language.hpp"

namespace satdforge::code {

// Structural markers emitted for Python. Spelled so they cannot collide with
// real tokens ('<' would lex separately).
inline constexpr std::string_view kNewlineMarker = "<NEWLINE>";
inline constexpr std::string_view kIndentMarker = "<INDENT>";
inline constexpr std::string_view kDedentMarker = "<DEDENT>";

enum class TokenKind {
  Word,     // identifier or keyword
  Number,
  String,   // whitespace-split piece of a string literal
  Symbol,   // operator or punctuation
  Comment,  // whitespace-split piece of a comment, including markers
  Marker,   // <NEWLINE> / <INDENT> / <DEDENT>
};

struct Token {
  std::string text;
  TokenKind kind = TokenKind::Word;
  int line = 1;      // 1-based line the token starts on
  int end_line = 1;  // last line it touches (strings/comments may span)
};

using TokenStream = std::vector<std::string>;

// Full token sequence including comment pieces.
std::vector<Token> lex_detailed(std::string_view source, Language lang);

// Deterministic lexical split: identifiers, literals, operators, punctuation,
// and for Python the structural markers. Unknown bytes become single-character
// tokens; comments are split into their marker and word pieces. For Java the
// concatenation of the stream equals the input with all whitespace removed.
TokenStream lex_tokens(std::string_view source, Language lang);

}  // namespace satdforge::code
