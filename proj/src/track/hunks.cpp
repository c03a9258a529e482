#include "satdforge/track/hunks.hpp"

#include "satdforge/diff/matcher.hpp"

namespace satdforge::track {

std::vector<Hunk> compute_hunks(const std::vector<std::string>& old_lines,
                                const std::vector<std::string>& new_lines) {
  std::vector<Hunk> hunks;
  for (const auto& op : diff::opcodes(old_lines, new_lines)) {
    if (op.tag == diff::OpTag::Equal) continue;
    Hunk h;
    h.old_start = static_cast<int>(op.a1) + 1;
    h.old_len = static_cast<int>(op.a2 - op.a1);
    h.new_start = static_cast<int>(op.b1) + 1;
    h.new_len = static_cast<int>(op.b2 - op.b1);
    h.deleted_lines.assign(old_lines.begin() + static_cast<std::ptrdiff_t>(op.a1),
                           old_lines.begin() + static_cast<std::ptrdiff_t>(op.a2));
    h.inserted_lines.assign(new_lines.begin() + static_cast<std::ptrdiff_t>(op.b1),
                            new_lines.begin() + static_cast<std::ptrdiff_t>(op.b2));
    hunks.push_back(std::move(h));
  }
  return hunks;
}

std::optional<int> map_line(int line, const std::vector<Hunk>& hunks) {
  int delta = 0;
  for (const auto& h : hunks) {
    if (line < h.old_start) break;
    if (h.old_len > 0 && line < h.old_start + h.old_len) return std::nullopt;
    delta += h.new_len - h.old_len;
  }
  return line + delta;
}

}  // namespace satdforge::track
