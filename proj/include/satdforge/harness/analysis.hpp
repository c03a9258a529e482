#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "satdforge/harness/evaluate.hpp"
#include "satdforge/harness/run_io.hpp"

namespace satdforge::harness {

struct MismatchedKeys : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstantVector : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LengthMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AggregateRow {
  std::size_t items = 0;
  double em_percent = 0.0;  // 100 * solved / items
  double bleu_diff = 0.0;
  double crystal_diff = 0.0;
  double line_p = 0.0;
  double line_r = 0.0;
  double line_f = 0.0;
  double avg_deleted = 0.0;
  double avg_inserted = 0.0;
  double bleu_whole = 0.0;
  double crystal_whole = 0.0;
};

AggregateRow aggregate(const std::vector<ItemResult>& items);
inline AggregateRow aggregate(const ExperimentRun& run) {
  return aggregate(run.items);
}

struct DifficultyAggregates {
  AggregateRow all;
  AggregateRow easy;
  AggregateRow hard;
};

DifficultyAggregates aggregate_by_difficulty(
    const ExperimentRun& run,
    const std::map<std::string, Difficulty>& difficulty_by_key);

// Per-item best EM over templates of one model, as a percentage. All runs
// must cover the same sample keys.
double oracle_em(const std::vector<ExperimentRun>& runs);

struct CoverageCounts {
  std::size_t addressed_by_all = 0;
  std::size_t addressed_by_at_least_one = 0;
  std::size_t addressed_by_exactly_one = 0;
};

// Per item, how many runs reached EM = 1.
CoverageCounts coverage_counts(const std::vector<ExperimentRun>& runs);

// Pearson product-moment correlation; requires two non-constant vectors of
// equal length >= 2.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace satdforge::harness
