#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satdforge/diff/matcher.hpp"

namespace satdforge::metrics {

enum class Direction { Delete, Insert };

struct DiffElement {
  Direction direction;
  std::string text;  // trailing whitespace stripped

  bool operator==(const DiffElement&) const = default;
};

// The changed lines between two texts, delete/insert only, in document order.
class LineDiff {
 public:
  LineDiff() = default;
  LineDiff(std::vector<DiffElement> elements, std::vector<diff::Opcode> ops)
      : elements_(std::move(elements)), ops_(std::move(ops)) {}

  const std::vector<DiffElement>& elements() const { return elements_; }
  const std::vector<diff::Opcode>& ops() const { return ops_; }
  bool empty() const { return elements_.empty(); }

  // Unique (direction, line) pairs.
  std::set<std::pair<Direction, std::string>> set_view() const;

  // Reconstructs b from a's lines plus this diff's structure and element
  // texts. Throws std::logic_error if the diff does not fit a.
  std::vector<std::string> apply_to(const std::vector<std::string>& a) const;

 private:
  std::vector<DiffElement> elements_;
  std::vector<diff::Opcode> ops_;
};

// Lines of `text` with trailing whitespace stripped; the unit every diff
// metric works on.
std::vector<std::string> diff_lines(std::string_view text);

LineDiff line_diff(std::string_view a, std::string_view b);

}  // namespace satdforge::metrics
