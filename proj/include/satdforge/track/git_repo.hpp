#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "satdforge/track/record.hpp"

namespace satdforge::track {

struct RepoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thin wrapper around the git CLI for one local clone.
class GitRepo {
 public:
  explicit GitRepo(std::filesystem::path path) : path_(std::move(path)) {}

  const std::filesystem::path& path() const { return path_; }

  // First-parent walk of HEAD, oldest to newest, with timestamps.
  std::vector<CommitRef> first_parent_walk() const;

  struct FileChange {
    char status = 'M';  // A, M, D, R (T is folded into M, C into A)
    std::string old_path;
    std::string new_path;
  };

  // Changed files between parent and commit (all files of the root commit
  // when parent is absent), with rename detection at the given similarity
  // percentage.
  std::vector<FileChange> changes(const std::optional<std::string>& parent,
                                  const std::string& commit,
                                  int rename_threshold_percent) const;

  std::optional<std::string> file_at(const std::string& commit,
                                     const std::string& path) const;

  long long commit_timestamp(const std::string& commit) const;

  std::optional<std::string> first_parent(const std::string& commit) const;

 private:
  std::string git(const std::vector<std::string>& args) const;
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, long long> timestamp_cache_;
};

// (user, project) from the clone path's last two components.
std::pair<std::string, std::string> derive_user_project(
    const std::filesystem::path& repo_path);

}  // namespace satdforge::track
