#include "satdforge/harness/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace satdforge::harness {

AggregateRow aggregate(const std::vector<ItemResult>& items) {
  AggregateRow row;
  row.items = items.size();
  if (items.empty()) return row;
  std::size_t solved = 0;
  for (const auto& item : items) {
    solved += item.report.exact_match == 1 ? 1 : 0;
    row.bleu_diff += item.report.bleu_diff;
    row.crystal_diff += item.report.crystal_diff;
    row.line_p += item.report.line_p;
    row.line_r += item.report.line_r;
    row.line_f += item.report.line_f;
    row.avg_deleted += static_cast<double>(item.report.deleted_lines);
    row.avg_inserted += static_cast<double>(item.report.inserted_lines);
    row.bleu_whole += item.report.bleu_whole;
    row.crystal_whole += item.report.crystal_whole;
  }
  auto n = static_cast<double>(items.size());
  row.em_percent = 100.0 * static_cast<double>(solved) / n;
  row.bleu_diff /= n;
  row.crystal_diff /= n;
  row.line_p /= n;
  row.line_r /= n;
  row.line_f /= n;
  row.avg_deleted /= n;
  row.avg_inserted /= n;
  row.bleu_whole /= n;
  row.crystal_whole /= n;
  return row;
}

DifficultyAggregates aggregate_by_difficulty(
    const ExperimentRun& run,
    const std::map<std::string, Difficulty>& difficulty_by_key) {
  std::vector<ItemResult> easy, hard;
  for (const auto& item : run.items) {
    auto it = difficulty_by_key.find(item.sample_key);
    if (it == difficulty_by_key.end())
      throw MismatchedKeys("no difficulty known for " + item.sample_key);
    (it->second == Difficulty::Easy ? easy : hard).push_back(item);
  }
  return {aggregate(run.items), aggregate(easy), aggregate(hard)};
}

namespace {

std::map<std::string, int> em_by_key(const ExperimentRun& run) {
  std::map<std::string, int> em;
  for (const auto& item : run.items) em[item.sample_key] = item.report.exact_match;
  return em;
}

void require_same_keys(const std::vector<ExperimentRun>& runs) {
  if (runs.empty()) throw MismatchedKeys("no runs given");
  std::set<std::string> base;
  for (const auto& item : runs.front().items) base.insert(item.sample_key);
  for (const auto& run : runs) {
    std::set<std::string> keys;
    for (const auto& item : run.items) keys.insert(item.sample_key);
    if (keys != base)
      throw MismatchedKeys("runs cover different sample keys");
    if (keys.size() != run.items.size())
      throw MismatchedKeys("duplicate sample keys in run");
  }
}

}  // namespace

double oracle_em(const std::vector<ExperimentRun>& runs) {
  require_same_keys(runs);
  std::map<std::string, int> best;
  for (const auto& run : runs)
    for (const auto& [key, em] : em_by_key(run))
      best[key] = std::max(best[key], em);
  if (best.empty()) return 0.0;
  std::size_t solved = 0;
  for (const auto& [key, em] : best) solved += em == 1 ? 1 : 0;
  return 100.0 * static_cast<double>(solved) / static_cast<double>(best.size());
}

CoverageCounts coverage_counts(const std::vector<ExperimentRun>& runs) {
  require_same_keys(runs);
  std::map<std::string, std::size_t> solved_count;
  for (const auto& run : runs)
    for (const auto& item : run.items)
      if (item.report.exact_match == 1) ++solved_count[item.sample_key];

  CoverageCounts counts;
  for (const auto& [key, n] : solved_count) {
    if (n == runs.size()) ++counts.addressed_by_all;
    if (n >= 1) ++counts.addressed_by_at_least_one;
    if (n == 1) ++counts.addressed_by_exactly_one;
  }
  return counts;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw LengthMismatch("vectors differ in length");
  if (x.size() < 2)
    throw LengthMismatch("need at least two points");
  auto n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0)
    throw ConstantVector("correlation undefined for a constant vector");
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace satdforge::harness
