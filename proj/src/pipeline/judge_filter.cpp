#include "satdforge/pipeline/judge_filter.hpp"

#include "satdforge/judge/prompt.hpp"
#include "satdforge/judge/verdict.hpp"
#include "satdforge/pipeline/dataset_io.hpp"
#include "satdforge/util/log.hpp"

namespace satdforge::pipeline {

JudgeFilterResult apply_judge_filter(const std::vector<RepaymentSample>& samples,
                                     judge::ChatClient& client,
                                     const JudgeFilterOptions& options) {
  std::vector<judge::ChatRequest> requests;
  requests.reserve(samples.size());
  for (const auto& s : samples) {
    judge::ChatRequest req;
    req.model = client.config().model;
    req.prompt = judge::render_judge_prompt(s.method_before, s.method_after,
                                            s.record.comment_text);
    req.temperature = 0.0;
    req.max_output_tokens = options.max_output_tokens;
    requests.push_back(std::move(req));
  }

  std::vector<judge::ChatClient::Outcome> outcomes =
      client.complete_many(requests);

  JudgeFilterResult result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!outcomes[i].text) {
      util::log_warn("judge unavailable for " + sample_key(samples[i]) + ": " +
                     outcomes[i].error);
      result.pending.push_back(samples[i]);
      continue;
    }
    judge::JudgeVerdict verdict = judge::parse_verdict(*outcomes[i].text);
    if (verdict.label == judge::JudgeLabel::Yes)
      result.kept.push_back(samples[i]);
  }
  if (!options.pending_path.empty() && !result.pending.empty())
    write_dataset(result.pending, options.pending_path);

  result.stats_row = {"judge_relevant", result.kept.size()};
  return result;
}

}  // namespace satdforge::pipeline
