#include "satdforge/judge/prompt.hpp"

namespace satdforge::judge {

std::string render_judge_prompt(std::string_view method_before,
                                std::string_view method_after,
                                std::string_view satd_comment) {
  std::string prompt;
  prompt.reserve(method_before.size() + method_after.size() +
                 satd_comment.size() + 512);
  prompt +=
      "Two versions of a method are provided below. The first version "
      "contains a Self-Admitted Technical Debt (SATD) comment, while the SATD "
      "comment no longer exists in the second version. Analyze if the code "
      "updates in the second version are related to resolving that SATD, "
      "considering the surrounding code context in addition to the SATD "
      "comment itself.\n\n";
  prompt += "### Version 1:\n";
  prompt += method_before;
  prompt += "\n\n### Version 2:\n";
  prompt += method_after;
  prompt += "\n\n### SATD comment:\n";
  prompt += satd_comment;
  prompt += "\n\n### Consider the following questions in your analysis:\n";
  prompt +=
      "- Shortly explain what specific changes were made in Version 2 "
      "compared to Version 1?\n";
  prompt +=
      "- Are these changes mainly proposed to address the issue mentioned in "
      "the SATD comment? Please answer with Yes, No, or Unclear.";
  return prompt;
}

}  // namespace satdforge::judge
