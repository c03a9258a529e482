#include "satdforge/code/lexer.hpp"

#include "satdforge/code/scan.hpp"

namespace satdforge::code {

std::vector<Token> lex_detailed(std::string_view source, Language lang) {
  return detail::scan_source(source, lang).tokens;
}

TokenStream lex_tokens(std::string_view source, Language lang) {
  std::vector<Token> tokens = lex_detailed(source, lang);
  TokenStream stream;
  stream.reserve(tokens.size());
  for (auto& t : tokens) stream.push_back(std::move(t.text));
  return stream;
}

}  // namespace satdforge::code
