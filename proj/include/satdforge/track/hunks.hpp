#pragma once

#include <optional>
#include <string>
#include <vector>

namespace satdforge::track {

// A contiguous change between two file versions. old_start is the first
// affected old line (1-based); for a pure insertion (old_len == 0) it names
// the old line the insertion precedes.
struct Hunk {
  int old_start = 1;
  int old_len = 0;
  int new_start = 1;
  int new_len = 0;
  std::vector<std::string> deleted_lines;
  std::vector<std::string> inserted_lines;
};

// Hunks between two line vectors, sorted and non-overlapping in old
// coordinates.
std::vector<Hunk> compute_hunks(const std::vector<std::string>& old_lines,
                                const std::vector<std::string>& new_lines);

// Position of `line` after applying the hunks; nullopt when the line lies in
// a deleted range (the tracker may still re-match it within the hunk).
std::optional<int> map_line(int line, const std::vector<Hunk>& hunks);

}  // namespace satdforge::track
