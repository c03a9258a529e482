#include "satdforge/metrics/scores.hpp"

#include <algorithm>

#include "satdforge/code/normalize.hpp"

namespace satdforge::metrics {

int exact_match(std::string_view ground_truth, std::string_view generated,
                code::Language lang) {
  return code::canonicalize(ground_truth, lang) ==
                 code::canonicalize(generated, lang)
             ? 1
             : 0;
}

code::TokenStream render_diff_tokens(const LineDiff& diff,
                                     code::Language lang) {
  code::TokenStream out;
  for (const auto& e : diff.elements()) {
    out.push_back(e.direction == Direction::Delete ? "-" : "+");
    code::TokenStream line = code::lex_tokens(e.text, lang);
    out.insert(out.end(), line.begin(), line.end());
  }
  return out;
}

double diff_based_score(std::string_view input_code,
                        std::string_view ground_truth,
                        std::string_view generated, code::Language lang,
                        DiffMetric metric, const TriviallySharedNgrams& shared,
                        const BleuConfig& cfg) {
  std::string input = code::strip_icd(input_code, lang);
  std::string truth = code::strip_icd(ground_truth, lang);
  std::string gen = code::strip_icd(generated, lang);

  LineDiff reference = line_diff(input, truth);
  if (reference.empty())
    throw EmptyReferenceDiff("reference diff is empty: input equals ground truth");
  LineDiff candidate = line_diff(input, gen);

  code::TokenStream ref_tokens = render_diff_tokens(reference, lang);
  code::TokenStream cand_tokens = render_diff_tokens(candidate, lang);
  if (metric == DiffMetric::Bleu) return bleu(cand_tokens, ref_tokens, cfg);
  return crystal_bleu(cand_tokens, ref_tokens, shared, cfg);
}

LemodScores lemod(std::string_view input_code, std::string_view ground_truth,
                  std::string_view generated, code::Language lang) {
  std::string input = code::strip_icd(input_code, lang);
  std::string truth = code::strip_icd(ground_truth, lang);
  std::string gen = code::strip_icd(generated, lang);

  LineDiff reference = line_diff(input, truth);
  if (reference.empty())
    throw EmptyReferenceDiff("reference diff is empty: input equals ground truth");
  LineDiff candidate = line_diff(input, gen);

  auto ref_set = reference.set_view();
  auto cand_set = candidate.set_view();
  if (cand_set.empty()) return {0.0, 0.0, 0.0};

  std::size_t intersection = 0;
  for (const auto& e : cand_set) intersection += ref_set.count(e);

  LemodScores s;
  s.precision = static_cast<double>(intersection) /
                static_cast<double>(cand_set.size());
  s.recall = static_cast<double>(intersection) /
             static_cast<double>(ref_set.size());
  s.f1 = intersection == 0
             ? 0.0
             : 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

std::pair<long, long> diff_line_counts(std::string_view input_code,
                                       std::string_view generated,
                                       code::Language lang) {
  std::string input = code::strip_icd(input_code, lang);
  std::string gen = code::strip_icd(generated, lang);
  LineDiff d = line_diff(input, gen);
  long deleted = 0, inserted = 0;
  for (const auto& e : d.elements())
    (e.direction == Direction::Delete ? deleted : inserted) += 1;
  return {deleted, inserted};
}

}  // namespace satdforge::metrics
