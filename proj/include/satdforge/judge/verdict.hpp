#pragma once

#include <string>

namespace satdforge::judge {

enum class JudgeLabel { Yes, No, Unclear };

struct JudgeVerdict {
  JudgeLabel label = JudgeLabel::Unclear;
  std::string raw_response;
};

std::string judge_label_name(JudgeLabel label);

// Scans the final 10 lines of the response, outside code fences, for the last
// line carrying a standalone Yes/No/Unclear token (case-insensitive). A line
// carrying several distinct labels, or no label at all, yields Unclear. Total
// and pure.
JudgeVerdict parse_verdict(const std::string& response);

}  // namespace satdforge::judge
