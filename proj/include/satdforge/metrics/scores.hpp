#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "satdforge/code/language.hpp"
#include "satdforge/metrics/bleu.hpp"
#include "satdforge/metrics/line_diff.hpp"

namespace satdforge::metrics {

struct MetricReport {
  int exact_match = 0;       // 0 or 1
  double bleu_whole = 0.0;
  double crystal_whole = 0.0;
  double bleu_diff = 0.0;
  double crystal_diff = 0.0;
  double line_p = 0.0;
  double line_r = 0.0;
  double line_f = 0.0;
  long deleted_lines = 0;
  long inserted_lines = 0;
};

// The reference diff of a pipeline-filtered sample can never be empty; an
// empty one signals a corrupted sample.
struct EmptyReferenceDiff : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class DiffMetric { Bleu, Crystal };

struct LemodScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// 1 iff the canonicalized texts are equal.
int exact_match(std::string_view ground_truth, std::string_view generated,
                code::Language lang);

// Renders a diff as a token stream: per element a "-"/"+" marker followed by
// the lexed line, elements in diff order.
code::TokenStream render_diff_tokens(const LineDiff& diff, code::Language lang);

// BLEU/CrystalBLEU over the rendered candidate and reference diffs, after
// stripping ICD from all three texts.
double diff_based_score(std::string_view input_code,
                        std::string_view ground_truth,
                        std::string_view generated, code::Language lang,
                        DiffMetric metric, const TriviallySharedNgrams& shared,
                        const BleuConfig& cfg = {});

// Line-level exact match on diff: precision/recall/F1 over the set views of
// the reference and candidate diffs.
LemodScores lemod(std::string_view input_code, std::string_view ground_truth,
                  std::string_view generated, code::Language lang);

// Multiset delete/insert counts of line_diff(input, generated) after ICD
// stripping (LEMOD uses set semantics; these are the raw counts).
std::pair<long, long> diff_line_counts(std::string_view input_code,
                                       std::string_view generated,
                                       code::Language lang);

}  // namespace satdforge::metrics
