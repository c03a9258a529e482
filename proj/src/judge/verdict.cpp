#include "satdforge/judge/verdict.hpp"

#include <array>
#include <cctype>
#include <set>
#include <vector>

#include "satdforge/util/strings.hpp"

namespace satdforge::judge {

std::string judge_label_name(JudgeLabel label) {
  switch (label) {
    case JudgeLabel::Yes: return "Yes";
    case JudgeLabel::No: return "No";
    case JudgeLabel::Unclear: return "Unclear";
  }
  return "Unclear";
}

namespace {

bool word_at(const std::string& lower_line, std::size_t pos, std::size_t len) {
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  if (pos > 0 && is_word(lower_line[pos - 1])) return false;
  if (pos + len < lower_line.size() && is_word(lower_line[pos + len]))
    return false;
  return true;
}

std::set<JudgeLabel> labels_on_line(const std::string& line) {
  static const std::array<std::pair<const char*, JudgeLabel>, 3> kLabels = {{
      {"unclear", JudgeLabel::Unclear},
      {"yes", JudgeLabel::Yes},
      {"no", JudgeLabel::No},
  }};
  std::string lower = util::to_lower(line);
  std::set<JudgeLabel> found;
  for (const auto& [word, label] : kLabels) {
    std::string w = word;
    std::size_t pos = 0;
    while ((pos = lower.find(w, pos)) != std::string::npos) {
      if (word_at(lower, pos, w.size())) {
        found.insert(label);
        break;
      }
      ++pos;
    }
  }
  // "unclear" contains no embedded label words, but "no" inside "unclear"
  // would not be standalone anyway thanks to the boundary check.
  return found;
}

}  // namespace

JudgeVerdict parse_verdict(const std::string& response) {
  JudgeVerdict verdict;
  verdict.raw_response = response;

  std::vector<std::string> lines = util::split_lines(response);
  std::vector<bool> fenced(lines.size(), false);
  bool in_fence = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string t = util::trim(lines[i]);
    if (t.rfind("```", 0) == 0) {
      in_fence = !in_fence;
      fenced[i] = true;  // fence markers themselves are excluded
    } else {
      fenced[i] = in_fence;
    }
  }

  std::size_t first = lines.size() > 10 ? lines.size() - 10 : 0;
  for (std::size_t i = lines.size(); i-- > first;) {
    if (fenced[i]) continue;
    std::set<JudgeLabel> found = labels_on_line(lines[i]);
    if (found.empty()) continue;
    verdict.label = found.size() == 1 ? *found.begin() : JudgeLabel::Unclear;
    return verdict;
  }
  verdict.label = JudgeLabel::Unclear;
  return verdict;
}

}  // namespace satdforge::judge
