#include "satdforge/track/tracker.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "satdforge/track/hunks.hpp"
#include "satdforge/util/log.hpp"
#include "satdforge/util/strings.hpp"

namespace satdforge::track {

namespace {

bool relevant_path(const std::string& path, code::Language lang) {
  std::string ext = code::source_extension(lang);
  return path.size() > ext.size() &&
         path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
}

bool unusable_content(const std::string& content, std::size_t max_bytes) {
  return content.size() > max_bytes ||
         content.find('\0') != std::string::npos;
}

double token_set_jaccard(const std::string& a, const std::string& b) {
  std::vector<std::string> ta = util::whitespace_tokens(a);
  std::vector<std::string> tb = util::whitespace_tokens(b);
  std::set<std::string> sa(ta.begin(), ta.end());
  std::set<std::string> sb(tb.begin(), tb.end());
  if (sa.empty() && sb.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& t : sa) inter += sb.count(t);
  std::size_t uni = sa.size() + sb.size() - inter;
  return uni == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

struct TrackState {
  bool alive = true;
  std::string file;
  int line = 0;
};

class Tracker {
 public:
  Tracker(const std::filesystem::path& repo_path, code::Language lang,
          const TrackOptions& options)
      : repo_(repo_path), lang_(lang), options_(options) {
    std::tie(user_, project_) = derive_user_project(repo_path);
  }

  std::vector<SatdRecord> run() {
    for (const CommitRef& commit : repo_.first_parent_walk()) process(commit);
    return std::move(records_);
  }

 private:
  GitRepo repo_;
  code::Language lang_;
  TrackOptions options_;
  std::string user_, project_;
  std::vector<SatdRecord> records_;
  std::vector<TrackState> state_;
  std::unordered_map<std::string, std::vector<std::size_t>> by_file_;

  void process(const CommitRef& commit) {
    auto changes =
        repo_.changes(commit.parent_id, commit.id, options_.rename_threshold_percent);
    std::sort(changes.begin(), changes.end(),
              [](const GitRepo::FileChange& a, const GitRepo::FileChange& b) {
                return std::tie(a.new_path, a.old_path) <
                       std::tie(b.new_path, b.old_path);
              });
    for (auto& change : changes) {
      bool old_rel = relevant_path(change.old_path, lang_);
      bool new_rel = relevant_path(change.new_path, lang_);
      char status = change.status;
      if (status == 'R') {
        if (old_rel && !new_rel)
          status = 'D';
        else if (!old_rel && new_rel)
          status = 'A';
        else if (!old_rel)
          continue;
      } else if (status == 'D') {
        if (!old_rel) continue;
      } else if (!new_rel) {
        continue;
      }

      if (status == 'D') {
        mark_file_deleted(change.old_path, commit.id);
      } else if (status == 'A') {
        process_added(commit, change.new_path);
      } else {
        process_modified(commit, change.old_path, change.new_path);
      }
    }
  }

  void mark_file_deleted(const std::string& path, const std::string& commit_id) {
    auto it = by_file_.find(path);
    if (it == by_file_.end()) return;
    for (std::size_t idx : it->second) {
      if (!state_[idx].alive) continue;
      records_[idx].deletion_commit = commit_id;
      records_[idx].line_before_deletion = state_[idx].line;
      state_[idx].alive = false;
    }
    by_file_.erase(it);
  }

  void add_new_satds(const std::string& commit_id, const std::string& path,
                     const std::vector<code::CommentSpan>& spans,
                     const std::set<int>& occupied) {
    for (const auto& span : spans) {
      if (!code::detect_satd(span.text, options_.keywords)) continue;
      if (occupied.count(span.start_line)) continue;
      SatdRecord rec;
      rec.user = user_;
      rec.project = project_;
      rec.file_path = path;
      rec.creation_commit = commit_id;
      rec.line_at_creation = span.start_line;
      rec.comment_text = span.text;
      rec.language = lang_;
      by_file_[path].push_back(records_.size());
      state_.push_back({true, path, span.start_line});
      records_.push_back(std::move(rec));
    }
  }

  void process_added(const CommitRef& commit, const std::string& path) {
    auto content = repo_.file_at(commit.id, path);
    if (!content) return;
    if (unusable_content(*content, options_.max_file_bytes)) return;
    add_new_satds(commit.id, path,
                  code::extract_comments(*content, lang_), {});
  }

  void process_modified(const CommitRef& commit, const std::string& old_path,
                        const std::string& new_path) {
    std::vector<std::size_t> live;
    if (auto it = by_file_.find(old_path); it != by_file_.end()) {
      live = std::move(it->second);
      by_file_.erase(it);
    }

    auto new_content = repo_.file_at(commit.id, new_path);
    if (!new_content) {
      // Vanished despite the M/R status; treat as a deletion.
      for (std::size_t idx : live) {
        if (!state_[idx].alive) continue;
        records_[idx].deletion_commit = commit.id;
        records_[idx].line_before_deletion = state_[idx].line;
        state_[idx].alive = false;
      }
      return;
    }

    auto old_content =
        commit.parent_id ? repo_.file_at(*commit.parent_id, old_path)
                         : std::optional<std::string>{};
    bool diffable = old_content &&
                    !unusable_content(*old_content, options_.max_file_bytes) &&
                    !unusable_content(*new_content, options_.max_file_bytes);
    if (!diffable) {
      // Keep positions as they are but follow the path.
      for (std::size_t idx : live) {
        state_[idx].file = new_path;
        records_[idx].file_path = new_path;
        by_file_[new_path].push_back(idx);
      }
      return;
    }

    std::vector<std::string> old_lines = util::split_lines(*old_content);
    std::vector<std::string> new_lines = util::split_lines(*new_content);
    std::vector<Hunk> hunks = compute_hunks(old_lines, new_lines);
    std::vector<code::CommentSpan> spans =
        code::extract_comments(*new_content, lang_);

    std::map<int, const code::CommentSpan*> span_by_start;
    std::map<int, const code::CommentSpan*> span_covering;
    for (const auto& span : spans) {
      span_by_start[span.start_line] = &span;
      for (int l = span.start_line; l <= span.end_line; ++l)
        span_covering[l] = &span;
    }

    std::set<int> occupied;
    std::set<int> claimed;
    for (std::size_t idx : live) {
      if (!state_[idx].alive) continue;
      int old_line = state_[idx].line;
      std::optional<int> mapped = map_line(old_line, hunks);
      if (!mapped)
        mapped = rematch_line(old_line, old_lines, hunks, span_covering,
                              occupied, claimed, records_[idx]);
      if (mapped) {
        state_[idx].line = *mapped;
        state_[idx].file = new_path;
        records_[idx].file_path = new_path;
        if (auto it = span_by_start.find(*mapped); it != span_by_start.end())
          records_[idx].comment_text = it->second->text;
        occupied.insert(*mapped);
        by_file_[new_path].push_back(idx);
      } else {
        records_[idx].deletion_commit = commit.id;
        records_[idx].line_before_deletion = old_line;
        records_[idx].file_path = new_path;
        state_[idx].alive = false;
      }
    }

    add_new_satds(commit.id, new_path, spans, occupied);
  }

  // A deleted SATD line is re-matched to an inserted comment line of the same
  // hunk when their token-set Jaccard similarity clears the threshold.
  std::optional<int> rematch_line(
      int old_line, const std::vector<std::string>& old_lines,
      const std::vector<Hunk>& hunks,
      const std::map<int, const code::CommentSpan*>& span_covering,
      const std::set<int>& occupied, std::set<int>& claimed,
      SatdRecord& record) {
    const Hunk* hunk = nullptr;
    for (const auto& h : hunks) {
      if (h.old_len > 0 && old_line >= h.old_start &&
          old_line < h.old_start + h.old_len) {
        hunk = &h;
        break;
      }
    }
    if (!hunk) return std::nullopt;
    if (old_line < 1 || old_line > static_cast<int>(old_lines.size()))
      return std::nullopt;
    const std::string& old_text = old_lines[old_line - 1];

    double best = 0.0;
    int best_line = -1;
    for (int k = 0; k < hunk->new_len; ++k) {
      int new_line = hunk->new_start + k;
      if (claimed.count(new_line) || occupied.count(new_line)) continue;
      auto cover = span_covering.find(new_line);
      if (cover == span_covering.end()) continue;
      double sim = token_set_jaccard(old_text, hunk->inserted_lines[k]);
      if (sim > best) {
        best = sim;
        best_line = new_line;
      }
    }
    if (best_line < 0 || best < options_.rematch_jaccard) return std::nullopt;
    claimed.insert(best_line);

    const code::CommentSpan* span = span_covering.at(best_line);
    record.comment_text = span->text;
    return span->start_line;
  }
};

}  // namespace

std::vector<SatdRecord> track_repository(const std::filesystem::path& repo_path,
                                         code::Language lang,
                                         const TrackOptions& options) {
  return Tracker(repo_path, lang, options).run();
}

}  // namespace satdforge::track
