#include "satdforge/metrics/line_diff.hpp"

#include <stdexcept>

#include "satdforge/util/strings.hpp"

namespace satdforge::metrics {

std::set<std::pair<Direction, std::string>> LineDiff::set_view() const {
  std::set<std::pair<Direction, std::string>> view;
  for (const auto& e : elements_) view.insert({e.direction, e.text});
  return view;
}

std::vector<std::string> LineDiff::apply_to(
    const std::vector<std::string>& a) const {
  std::vector<std::string> out;
  std::size_t next_element = 0;
  auto take = [&](Direction dir) -> const std::string& {
    if (next_element >= elements_.size() ||
        elements_[next_element].direction != dir)
      throw std::logic_error("diff elements out of step with opcodes");
    return elements_[next_element++].text;
  };
  for (const auto& op : ops_) {
    if (op.a2 > a.size()) throw std::logic_error("diff does not fit input");
    switch (op.tag) {
      case diff::OpTag::Equal:
        for (std::size_t i = op.a1; i < op.a2; ++i) out.push_back(a[i]);
        break;
      case diff::OpTag::Delete:
      case diff::OpTag::Replace:
        for (std::size_t i = op.a1; i < op.a2; ++i) {
          if (take(Direction::Delete) != a[i])
            throw std::logic_error("deleted line does not match input");
        }
        for (std::size_t j = op.b1; j < op.b2; ++j)
          out.push_back(take(Direction::Insert));
        break;
      case diff::OpTag::Insert:
        for (std::size_t j = op.b1; j < op.b2; ++j)
          out.push_back(take(Direction::Insert));
        break;
    }
  }
  if (next_element != elements_.size())
    throw std::logic_error("unused diff elements");
  return out;
}

std::vector<std::string> diff_lines(std::string_view text) {
  std::vector<std::string> lines = util::split_lines(text);
  for (auto& line : lines) line = util::rstrip(line);
  return lines;
}

LineDiff line_diff(std::string_view a, std::string_view b) {
  std::vector<std::string> la = diff_lines(a);
  std::vector<std::string> lb = diff_lines(b);
  std::vector<diff::Opcode> ops = diff::opcodes(la, lb);
  std::vector<DiffElement> elements;
  for (const auto& op : ops) {
    if (op.tag == diff::OpTag::Equal) continue;
    for (std::size_t i = op.a1; i < op.a2; ++i)
      elements.push_back({Direction::Delete, la[i]});
    for (std::size_t j = op.b1; j < op.b2; ++j)
      elements.push_back({Direction::Insert, lb[j]});
  }
  return LineDiff(std::move(elements), std::move(ops));
}

}  // namespace satdforge::metrics
