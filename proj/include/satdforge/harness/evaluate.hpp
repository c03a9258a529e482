#pragma once

#include <string>
#include <vector>

#include "satdforge/metrics/scores.hpp"
#include "satdforge/pipeline/sample.hpp"

namespace satdforge::harness {

enum class Difficulty { Easy, Hard };

// Easy iff the reference diff inserts at most two lines; deleted lines are
// not considered.
Difficulty classify_difficulty(const pipeline::RepaymentSample& sample);

// Trivially shared n-grams over the dataset's ground-truth methods after ICD
// stripping.
metrics::TriviallySharedNgrams build_shared_ngrams(
    const std::vector<pipeline::RepaymentSample>& samples, std::size_t k = 500,
    int max_order = 4);

// Fills every MetricReport field for one generated repayment. Whole-code
// BLEU/CrystalBLEU run on ICD-stripped full texts alongside the diff
// variants. Propagates EmptyReferenceDiff for corrupted samples.
metrics::MetricReport evaluate_item(const pipeline::RepaymentSample& sample,
                                    const std::string& generated,
                                    const metrics::TriviallySharedNgrams& shared,
                                    const metrics::BleuConfig& cfg = {});

}  // namespace satdforge::harness
