#pragma once

#include <string>
#include <vector>

namespace satdforge::diff {

struct MatchBlock {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t size = 0;
};

enum class OpTag { Equal, Replace, Delete, Insert };

struct Opcode {
  OpTag tag;
  std::size_t a1, a2;  // half-open range in a
  std::size_t b1, b2;  // half-open range in b
};

// Longest-contiguous-matching-blocks decomposition in the Ratcliff-Obershelp
// style: repeatedly take the longest match (earliest in a, then in b on ties)
// and recurse on both sides. Blocks are returned sorted and end with the
// terminal (|a|, |b|, 0) block.
std::vector<MatchBlock> matching_blocks(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b);

std::vector<Opcode> opcodes(const std::vector<std::string>& a,
                            const std::vector<std::string>& b);

}  // namespace satdforge::diff
