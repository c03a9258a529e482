#include "satdforge/track/git_repo.hpp"

#include <charconv>

#include "satdforge/util/strings.hpp"
#include "satdforge/util/subprocess.hpp"

namespace satdforge::track {

std::string GitRepo::git(const std::vector<std::string>& args) const {
  std::vector<std::string> argv = {"git", "-C", path_.string()};
  argv.insert(argv.end(), args.begin(), args.end());
  util::CommandResult res = util::run_command(argv);
  if (!res.ok())
    throw RepoError("git " + (args.empty() ? "" : args[0]) + " failed in " +
                    path_.string() + ": " + util::trim(res.err));
  return res.out;
}

std::vector<CommitRef> GitRepo::first_parent_walk() const {
  std::string out =
      git({"log", "--first-parent", "--reverse", "--format=%H %ct", "HEAD"});
  std::vector<CommitRef> walk;
  for (const std::string& line : util::split_lines(out)) {
    if (line.empty()) continue;
    std::size_t space = line.find(' ');
    if (space == std::string::npos)
      throw RepoError("unparseable log line: " + line);
    CommitRef ref;
    ref.id = line.substr(0, space);
    ref.timestamp = std::stoll(line.substr(space + 1));
    ref.ordinal = static_cast<int>(walk.size());
    if (!walk.empty()) ref.parent_id = walk.back().id;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      timestamp_cache_[ref.id] = ref.timestamp;
    }
    walk.push_back(std::move(ref));
  }
  if (walk.empty()) throw RepoError("no commits on HEAD in " + path_.string());
  return walk;
}

std::vector<GitRepo::FileChange> GitRepo::changes(
    const std::optional<std::string>& parent, const std::string& commit,
    int rename_threshold_percent) const {
  std::vector<std::string> args = {
      "diff-tree", "-r", "--no-commit-id", "-z", "--name-status",
      "-M" + std::to_string(rename_threshold_percent) + "%"};
  if (parent) {
    args.push_back(*parent);
  } else {
    args.push_back("--root");
  }
  args.push_back(commit);
  std::string out = git(args);

  std::vector<FileChange> result;
  std::size_t pos = 0;
  auto next_field = [&]() -> std::optional<std::string> {
    if (pos >= out.size()) return std::nullopt;
    std::size_t nul = out.find('\0', pos);
    if (nul == std::string::npos) nul = out.size();
    std::string field = out.substr(pos, nul - pos);
    pos = nul + 1;
    return field;
  };
  while (auto status = next_field()) {
    if (status->empty()) continue;
    char s = (*status)[0];
    FileChange change;
    if (s == 'R' || s == 'C') {
      auto oldp = next_field();
      auto newp = next_field();
      if (!oldp || !newp) break;
      change.status = s == 'R' ? 'R' : 'A';
      change.old_path = *oldp;
      change.new_path = *newp;
    } else {
      auto p = next_field();
      if (!p) break;
      change.status = (s == 'A' || s == 'M' || s == 'D') ? s : 'M';
      change.old_path = *p;
      change.new_path = *p;
    }
    result.push_back(std::move(change));
  }
  return result;
}

std::optional<std::string> GitRepo::file_at(const std::string& commit,
                                            const std::string& path) const {
  std::vector<std::string> argv = {"git", "-C", path_.string(), "cat-file",
                                   "blob", commit + ":" + path};
  util::CommandResult res = util::run_command(argv);
  if (!res.ok()) return std::nullopt;
  return res.out;
}

long long GitRepo::commit_timestamp(const std::string& commit) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = timestamp_cache_.find(commit);
    if (it != timestamp_cache_.end()) return it->second;
  }
  std::string out = git({"show", "-s", "--format=%ct", commit});
  long long ts = std::stoll(util::trim(out));
  std::lock_guard<std::mutex> lock(mutex_);
  timestamp_cache_[commit] = ts;
  return ts;
}

std::optional<std::string> GitRepo::first_parent(
    const std::string& commit) const {
  std::vector<std::string> argv = {"git",       "-C",  path_.string(),
                                   "rev-parse", "--verify", "--quiet",
                                   commit + "^"};
  util::CommandResult res = util::run_command(argv);
  if (!res.ok()) return std::nullopt;
  return util::trim(res.out);
}

std::pair<std::string, std::string> derive_user_project(
    const std::filesystem::path& repo_path) {
  std::filesystem::path normal = repo_path.lexically_normal();
  std::string project = normal.filename().string();
  if (project.empty()) {
    normal = normal.parent_path();
    project = normal.filename().string();
  }
  std::string user = normal.parent_path().filename().string();
  return {user, project};
}

}  // namespace satdforge::track
