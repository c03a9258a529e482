#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "satdforge/code/comments.hpp"
#include "satdforge/track/git_repo.hpp"
#include "satdforge/track/record.hpp"

namespace satdforge::track {

struct TrackOptions {
  std::vector<std::string> keywords = code::default_satd_keywords();
  std::size_t max_file_bytes = 1 << 20;  // larger files are skipped
  int rename_threshold_percent = 50;
  double rematch_jaccard = 0.5;  // in-hunk re-match threshold for edited lines
};

// Walks the first-parent linearization of HEAD oldest to newest, detects new
// SATD comments in each commit's added/changed files, maps tracked ones
// through each consecutive diff (following renames) and emits one record per
// SATD with its creation and deletion data. Deterministic for a fixed
// repository state. Throws RepoError when the repository is unreadable.
std::vector<SatdRecord> track_repository(const std::filesystem::path& repo_path,
                                         code::Language lang,
                                         const TrackOptions& options = {});

}  // namespace satdforge::track
