#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace satdforge::util {

std::optional<std::string> read_file(const std::filesystem::path& path);

// Writes to a sibling temp file and renames into place, so readers never
// observe a half-written file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Self-deleting temporary directory.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "satdforge");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace satdforge::util
