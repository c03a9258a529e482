#pragma once

#include <string>
#include <string_view>

#include "satdforge/code/language.hpp"

namespace satdforge::harness {

// Isolates the code from a model response: the last fenced block if any,
// otherwise the text after the final "Updated code" heading, otherwise the
// whole response. Never fails.
std::string extract_code_from_response(std::string_view response,
                                       code::Language lang);

}  // namespace satdforge::harness
