#pragma once

#include <string>
#include <string_view>

namespace satdforge::judge {

// The relevance-judge prompt. Byte-identical output for identical inputs.
std::string render_judge_prompt(std::string_view method_before,
                                std::string_view method_after,
                                std::string_view satd_comment);

}  // namespace satdforge::judge
