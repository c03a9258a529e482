#pragma once

#include <string>
#include <string_view>

#include "satdforge/code/language.hpp"

namespace satdforge::code {

// Removes import statements, comments and docstrings/Javadoc; lines left
// empty by a removal are dropped. Idempotent.
std::string strip_icd(std::string_view method_text, Language lang);

// strip_icd, then a formatting-insensitive rendering: Java drops all
// whitespace; Python re-renders the token stream with one space between
// tokens and four spaces per indent level. Idempotent.
std::string canonicalize(std::string_view method_text, Language lang);

}  // namespace satdforge::code
