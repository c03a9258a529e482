#include "satdforge/diff/matcher.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <unordered_map>

namespace satdforge::diff {

namespace {

using PositionIndex = std::unordered_map<std::string, std::vector<std::size_t>>;

MatchBlock find_longest_match(const std::vector<std::string>& a,
                              const PositionIndex& b2j, std::size_t alo,
                              std::size_t ahi, std::size_t blo,
                              std::size_t bhi) {
  std::size_t besti = alo, bestj = blo, bestsize = 0;
  std::unordered_map<std::size_t, std::size_t> j2len;
  for (std::size_t i = alo; i < ahi; ++i) {
    std::unordered_map<std::size_t, std::size_t> newj2len;
    auto it = b2j.find(a[i]);
    if (it != b2j.end()) {
      for (std::size_t j : it->second) {
        if (j < blo) continue;
        if (j >= bhi) break;
        std::size_t k = (j > 0 ? (j2len.count(j - 1) ? j2len[j - 1] : 0) : 0) + 1;
        newj2len[j] = k;
        if (k > bestsize) {
          besti = i - k + 1;
          bestj = j - k + 1;
          bestsize = k;
        }
      }
    }
    j2len = std::move(newj2len);
  }
  return {besti, bestj, bestsize};
}

}  // namespace

std::vector<MatchBlock> matching_blocks(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  PositionIndex b2j;
  for (std::size_t j = 0; j < b.size(); ++j) b2j[b[j]].push_back(j);

  std::vector<std::array<std::size_t, 4>> queue = {{0, a.size(), 0, b.size()}};
  std::vector<MatchBlock> blocks;
  while (!queue.empty()) {
    auto [alo, ahi, blo, bhi] = queue.back();
    queue.pop_back();
    MatchBlock m = find_longest_match(a, b2j, alo, ahi, blo, bhi);
    if (m.size == 0) continue;
    blocks.push_back(m);
    if (alo < m.a && blo < m.b) queue.push_back({alo, m.a, blo, m.b});
    if (m.a + m.size < ahi && m.b + m.size < bhi)
      queue.push_back({m.a + m.size, ahi, m.b + m.size, bhi});
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const MatchBlock& x, const MatchBlock& y) {
              return std::tie(x.a, x.b) < std::tie(y.a, y.b);
            });

  // Merge adjacent blocks.
  std::vector<MatchBlock> merged;
  for (const auto& m : blocks) {
    if (!merged.empty() && merged.back().a + merged.back().size == m.a &&
        merged.back().b + merged.back().size == m.b) {
      merged.back().size += m.size;
    } else {
      merged.push_back(m);
    }
  }
  merged.push_back({a.size(), b.size(), 0});
  return merged;
}

std::vector<Opcode> opcodes(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  std::vector<Opcode> ops;
  std::size_t i = 0, j = 0;
  for (const auto& m : matching_blocks(a, b)) {
    if (i < m.a && j < m.b)
      ops.push_back({OpTag::Replace, i, m.a, j, m.b});
    else if (i < m.a)
      ops.push_back({OpTag::Delete, i, m.a, j, j});
    else if (j < m.b)
      ops.push_back({OpTag::Insert, i, i, j, m.b});
    if (m.size > 0)
      ops.push_back({OpTag::Equal, m.a, m.a + m.size, m.b, m.b + m.size});
    i = m.a + m.size;
    j = m.b + m.size;
  }
  return ops;
}

}  // namespace satdforge::diff
