#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "satdforge/code/comments.hpp"
#include "satdforge/pipeline/sample.hpp"
#include "satdforge/track/git_repo.hpp"

namespace satdforge::pipeline {

enum class RejectReason {
  step3_not_in_method,
  step4_name_gone,
  step5_not_updated,
};

struct MethodPair {
  std::string before;
  std::string after;
};

// Resolves the containing method at the parent of the deletion commit and the
// same-named method at the deletion commit (same name and parameter count for
// Java). A file that vanished at the deletion commit counts as step 4.
std::variant<MethodPair, RejectReason> extract_method_pair(
    const track::SatdRecord& record, const track::GitRepo& repo,
    int rename_threshold_percent = 50);

// Per-step survivor counts in pipeline order; nonincreasing.
struct FilterStats {
  std::vector<std::pair<std::string, std::size_t>> rows;
};

struct PipelineOptions {
  std::vector<std::string> keywords = code::default_satd_keywords();
  std::size_t token_limit = 1024;
  int rename_threshold_percent = 50;
  int jobs = 1;
};

// (user, project) -> repository, or nullptr when unknown.
using RepoResolver = std::function<const track::GitRepo*(
    const std::string& user, const std::string& project)>;

struct FilterResult {
  std::vector<RepaymentSample> samples;
  FilterStats stats;
};

// The heuristic filter pipeline: deletion exists, >= 3 words, in or above a
// method, method name survives, method updated, exactly one SATD before and
// none after, duplicates removed, ASCII only, token limit. Survivor counts
// are recorded per step.
FilterResult apply_heuristic_filters(
    const std::vector<track::SatdRecord>& records, const RepoResolver& resolver,
    const PipelineOptions& options = {});

}  // namespace satdforge::pipeline
