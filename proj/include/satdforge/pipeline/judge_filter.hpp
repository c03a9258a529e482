#pragma once

#include <filesystem>
#include <utility>
#include <vector>

#include "satdforge/judge/client.hpp"
#include "satdforge/pipeline/sample.hpp"

namespace satdforge::pipeline {

struct JudgeFilterOptions {
  // Samples whose judge request keeps failing are parked here instead of
  // being silently kept or dropped. Empty path keeps them in memory only.
  std::filesystem::path pending_path;
  int max_output_tokens = 2048;
};

struct JudgeFilterResult {
  std::vector<RepaymentSample> kept;      // verdict Yes
  std::vector<RepaymentSample> pending;   // judge unavailable after retries
  std::pair<std::string, std::size_t> stats_row;
};

// Filter step 10: keeps exactly the samples the judge labels Yes; Unclear
// counts as No.
JudgeFilterResult apply_judge_filter(const std::vector<RepaymentSample>& samples,
                                     judge::ChatClient& client,
                                     const JudgeFilterOptions& options = {});

}  // namespace satdforge::pipeline
