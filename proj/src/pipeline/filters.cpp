#include "satdforge/pipeline/filters.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <tuple>

#include "satdforge/code/lexer.hpp"
#include "satdforge/code/methods.hpp"
#include "satdforge/code/normalize.hpp"
#include "satdforge/util/log.hpp"
#include "satdforge/util/strings.hpp"

namespace satdforge::pipeline {

namespace {

// The comment may sit above the method; the sample text then starts at the
// comment so method_before always contains it.
std::string before_text_with_comment(const code::MethodSpan& method,
                                     int satd_line,
                                     const std::vector<std::string>& lines) {
  int start = method.start_line;
  if (satd_line < start) start = satd_line;
  std::vector<std::string> slice(lines.begin() + (start - 1),
                                 lines.begin() + method.end_line);
  return util::join_lines(slice);
}

std::optional<std::string> old_path_at_parent(const track::SatdRecord& record,
                                              const track::GitRepo& repo,
                                              const std::string& parent,
                                              int rename_threshold) {
  for (const auto& change :
       repo.changes(parent, *record.deletion_commit, rename_threshold)) {
    if (change.new_path == record.file_path) return change.old_path;
  }
  return record.file_path;  // untouched by the deletion commit
}

int count_satds(const std::string& method_text, code::Language lang,
                const std::vector<std::string>& keywords) {
  int n = 0;
  for (const auto& span : code::extract_comments(method_text, lang))
    if (code::detect_satd(span.text, keywords)) ++n;
  return n;
}

}  // namespace

std::variant<MethodPair, RejectReason> extract_method_pair(
    const track::SatdRecord& record, const track::GitRepo& repo,
    int rename_threshold_percent) {
  const code::Language lang = record.language;
  const std::string deletion = *record.deletion_commit;

  std::optional<std::string> parent = repo.first_parent(deletion);
  if (!parent) return RejectReason::step4_name_gone;

  std::optional<std::string> before_path =
      old_path_at_parent(record, repo, *parent, rename_threshold_percent);
  std::optional<std::string> before_content =
      before_path ? repo.file_at(*parent, *before_path) : std::nullopt;
  if (!before_content) return RejectReason::step4_name_gone;

  std::vector<code::MethodSpan> methods;
  try {
    methods = code::extract_methods(*before_content, lang);
  } catch (const code::ParseAnomaly& e) {
    util::log_warn("skipping " + *before_path + "@" + *parent + ": " + e.what());
    return RejectReason::step3_not_in_method;
  }
  std::vector<code::CommentSpan> comments =
      code::extract_comments(*before_content, lang);
  std::vector<std::string> before_lines = util::split_lines(*before_content);

  const code::MethodSpan* method = code::containing_method(
      *record.line_before_deletion, methods, comments, before_lines);
  if (!method) return RejectReason::step3_not_in_method;

  std::optional<std::string> after_content =
      repo.file_at(deletion, record.file_path);
  if (!after_content) return RejectReason::step4_name_gone;

  std::vector<code::MethodSpan> after_methods;
  try {
    after_methods = code::extract_methods(*after_content, lang);
  } catch (const code::ParseAnomaly& e) {
    util::log_warn("skipping " + record.file_path + "@" + deletion + ": " +
                   e.what());
    return RejectReason::step4_name_gone;
  }

  const code::MethodSpan* after = nullptr;
  for (const auto& m : after_methods) {
    if (m.name != method->name) continue;
    if (lang == code::Language::Java && m.param_count != method->param_count)
      continue;
    after = &m;
    break;
  }
  if (!after) return RejectReason::step4_name_gone;

  MethodPair pair;
  pair.before = before_text_with_comment(*method, *record.line_before_deletion,
                                         before_lines);
  pair.after = after->text;
  if (code::canonicalize(pair.before, lang) ==
      code::canonicalize(pair.after, lang))
    return RejectReason::step5_not_updated;
  return pair;
}

FilterResult apply_heuristic_filters(
    const std::vector<track::SatdRecord>& records, const RepoResolver& resolver,
    const PipelineOptions& options) {
  FilterResult result;
  auto& rows = result.stats.rows;
  rows.emplace_back("satd_total", records.size());

  // Step 1: the SATD was deleted.
  std::vector<const track::SatdRecord*> work;
  for (const auto& r : records)
    if (r.deletion_commit && r.line_before_deletion) work.push_back(&r);
  rows.emplace_back("satd_deleted", work.size());

  // Step 2: three or more words.
  std::erase_if(work, [&](const track::SatdRecord* r) {
    return code::satd_word_count(r->comment_text) < 3;
  });
  rows.emplace_back("word_count_ge_3", work.size());

  // Steps 3-5 need repository access; extraction parallelizes per record and
  // merges deterministically by input order.
  struct Extracted {
    const track::SatdRecord* record = nullptr;
    std::variant<MethodPair, RejectReason> outcome = RejectReason::step3_not_in_method;
  };
  std::vector<Extracted> extracted(work.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= work.size()) return;
      const track::SatdRecord* r = work[i];
      const track::GitRepo* repo = resolver(r->user, r->project);
      if (!repo)
        throw std::runtime_error("no repository path known for project " +
                                 r->project);
      extracted[i] = {r, extract_method_pair(*r, *repo,
                                             options.rename_threshold_percent)};
    }
  };
  unsigned jobs = static_cast<unsigned>(std::max(options.jobs, 1));
  if (jobs <= 1 || work.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, work.size()); ++t)
      pool.emplace_back([&]() {
        try {
          worker();
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::size_t in_method = 0, name_survives = 0;
  std::vector<std::pair<const track::SatdRecord*, MethodPair>> updated;
  for (auto& e : extracted) {
    if (std::holds_alternative<MethodPair>(e.outcome)) {
      ++in_method;
      ++name_survives;
      updated.emplace_back(e.record, std::get<MethodPair>(std::move(e.outcome)));
      continue;
    }
    switch (std::get<RejectReason>(e.outcome)) {
      case RejectReason::step3_not_in_method:
        break;
      case RejectReason::step4_name_gone:
        ++in_method;
        break;
      case RejectReason::step5_not_updated:
        ++in_method;
        ++name_survives;
        break;
    }
  }
  rows.emplace_back("inside_or_above_method", in_method);
  rows.emplace_back("method_name_survives", name_survives);
  rows.emplace_back("method_updated", updated.size());

  // Step 9 (Table 5 row order): exactly one SATD before, none after.
  std::erase_if(updated, [&](const auto& item) {
    const auto& [record, pair] = item;
    return count_satds(pair.before, record->language, options.keywords) != 1 ||
           count_satds(pair.after, record->language, options.keywords) != 0;
  });
  rows.emplace_back("single_satd_before_none_after", updated.size());

  // Step 6: duplicates on the (before, after) pair, keeping the earliest by
  // (project, deletion timestamp, file_path).
  std::map<std::string, long long> deletion_ts;
  for (const auto& [record, pair] : updated) {
    std::string key = record->project + ":" + *record->deletion_commit;
    if (deletion_ts.count(key)) continue;
    const track::GitRepo* repo = resolver(record->user, record->project);
    deletion_ts[key] = repo ? repo->commit_timestamp(*record->deletion_commit) : 0;
  }
  auto ts_of = [&](const track::SatdRecord* r) {
    return deletion_ts[r->project + ":" + *r->deletion_commit];
  };
  std::stable_sort(updated.begin(), updated.end(),
                   [&](const auto& a, const auto& b) {
                     return std::make_tuple(a.first->project, ts_of(a.first),
                                            a.first->file_path,
                                            a.first->line_before_deletion) <
                            std::make_tuple(b.first->project, ts_of(b.first),
                                            b.first->file_path,
                                            b.first->line_before_deletion);
                   });
  std::set<std::pair<std::string, std::string>> seen;
  std::erase_if(updated, [&](const auto& item) {
    return !seen.insert({item.second.before, item.second.after}).second;
  });
  rows.emplace_back("deduplicated", updated.size());

  // Step 7: ASCII only.
  std::erase_if(updated, [&](const auto& item) {
    const auto& [record, pair] = item;
    return !(util::is_ascii(record->comment_text) &&
             util::is_ascii(pair.before) && util::is_ascii(pair.after));
  });
  rows.emplace_back("ascii_only", updated.size());

  // Step 8: lexical token limit on both sides.
  std::erase_if(updated, [&](const auto& item) {
    const auto& [record, pair] = item;
    return code::lex_tokens(pair.before, record->language).size() >
               options.token_limit ||
           code::lex_tokens(pair.after, record->language).size() >
               options.token_limit;
  });
  rows.emplace_back("token_limit_1024", updated.size());

  for (auto& [record, pair] : updated) {
    RepaymentSample sample;
    sample.record = *record;
    sample.method_before = std::move(pair.before);
    sample.method_after = std::move(pair.after);
    result.samples.push_back(std::move(sample));
  }
  return result;
}

}  // namespace satdforge::pipeline
