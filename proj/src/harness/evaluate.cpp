#include "satdforge/harness/evaluate.hpp"

#include "satdforge/code/normalize.hpp"

namespace satdforge::harness {

Difficulty classify_difficulty(const pipeline::RepaymentSample& sample) {
  auto [deleted, inserted] = metrics::diff_line_counts(
      sample.method_before, sample.method_after, sample.record.language);
  (void)deleted;
  return inserted <= 2 ? Difficulty::Easy : Difficulty::Hard;
}

metrics::TriviallySharedNgrams build_shared_ngrams(
    const std::vector<pipeline::RepaymentSample>& samples, std::size_t k,
    int max_order) {
  std::vector<code::TokenStream> corpus;
  corpus.reserve(samples.size());
  for (const auto& s : samples) {
    corpus.push_back(code::lex_tokens(
        code::strip_icd(s.method_after, s.record.language), s.record.language));
  }
  return metrics::trivially_shared(corpus, k, max_order);
}

metrics::MetricReport evaluate_item(const pipeline::RepaymentSample& sample,
                                    const std::string& generated,
                                    const metrics::TriviallySharedNgrams& shared,
                                    const metrics::BleuConfig& cfg) {
  const code::Language lang = sample.record.language;
  const std::string& input = sample.method_before;
  const std::string& truth = sample.method_after;

  metrics::MetricReport report;
  report.exact_match = metrics::exact_match(truth, generated, lang);

  code::TokenStream truth_tokens =
      code::lex_tokens(code::strip_icd(truth, lang), lang);
  code::TokenStream gen_tokens =
      code::lex_tokens(code::strip_icd(generated, lang), lang);
  report.bleu_whole = metrics::bleu(gen_tokens, truth_tokens, cfg);
  report.crystal_whole =
      metrics::crystal_bleu(gen_tokens, truth_tokens, shared, cfg);

  report.bleu_diff = metrics::diff_based_score(
      input, truth, generated, lang, metrics::DiffMetric::Bleu, shared, cfg);
  report.crystal_diff = metrics::diff_based_score(
      input, truth, generated, lang, metrics::DiffMetric::Crystal, shared, cfg);

  metrics::LemodScores lem = metrics::lemod(input, truth, generated, lang);
  report.line_p = lem.precision;
  report.line_r = lem.recall;
  report.line_f = lem.f1;

  std::tie(report.deleted_lines, report.inserted_lines) =
      metrics::diff_line_counts(input, generated, lang);
  return report;
}

}  // namespace satdforge::harness
