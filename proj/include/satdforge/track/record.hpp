#pragma once

#include <optional>
#include <string>

#include "satdforge/code/language.hpp"

namespace satdforge::track {

struct CommitRef {
  std::string id;
  std::optional<std::string> parent_id;  // previous commit in the walk
  long long timestamp = 0;               // seconds since epoch
  int ordinal = 0;                       // 0-based position in the walk
};

// One tracked SATD comment's lifespan.
struct SatdRecord {
  std::string user;
  std::string project;
  std::string file_path;  // path at the deletion (or latest) commit
  std::string creation_commit;
  std::optional<std::string> deletion_commit;
  int line_at_creation = 0;  // 1-based
  std::optional<int> line_before_deletion;
  std::string comment_text;  // text at last sighting
  code::Language language = code::Language::Java;

  bool operator==(const SatdRecord&) const = default;
};

}  // namespace satdforge::track
