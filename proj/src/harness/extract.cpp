#include "satdforge/harness/extract.hpp"

#include <vector>

#include "satdforge/util/strings.hpp"

namespace satdforge::harness {

namespace {

std::string join_range(const std::vector<std::string>& lines,
                       std::size_t begin, std::size_t end) {
  // Outer blank lines are trimmed; indentation is preserved.
  while (begin < end && util::is_blank(lines[begin])) ++begin;
  while (end > begin && util::is_blank(lines[end - 1])) --end;
  std::string out;
  for (std::size_t i = begin; i < end; ++i) {
    if (i > begin) out += '\n';
    out += lines[i];
  }
  return out;
}

}  // namespace

std::string extract_code_from_response(std::string_view response,
                                       code::Language lang) {
  (void)lang;
  std::vector<std::string> lines = util::split_lines(response);

  // Last fenced block wins; an unterminated final fence runs to the end.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::size_t open = lines.size();
  bool in_fence = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (util::trim(lines[i]).rfind("```", 0) != 0) continue;
    if (!in_fence) {
      open = i + 1;  // content starts after the fence/tag line
      in_fence = true;
    } else {
      blocks.emplace_back(open, i);
      in_fence = false;
    }
  }
  if (in_fence && open <= lines.size()) blocks.emplace_back(open, lines.size());
  if (!blocks.empty())
    return join_range(lines, blocks.back().first, blocks.back().second);

  // Text after the final "Updated code" heading.
  for (std::size_t i = lines.size(); i-- > 0;) {
    std::string lower = util::to_lower(lines[i]);
    if (lower.find("updated code") != std::string::npos &&
        i + 1 < lines.size()) {
      return join_range(lines, i + 1, lines.size());
    }
  }

  return join_range(lines, 0, lines.size());
}

}  // namespace satdforge::harness
