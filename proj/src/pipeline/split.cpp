#include "satdforge/pipeline/split.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace satdforge::pipeline {

namespace {

// splitmix64: deterministic across platforms, unlike std::shuffle with a
// standard distribution.
std::uint64_t next_random(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Largest-remainder apportionment with at least one repository per bucket.
std::array<std::size_t, 3> bucket_counts(std::size_t n,
                                         const std::array<double, 3>& ratios) {
  std::array<std::size_t, 3> counts{};
  std::array<double, 3> remainders{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    double exact = ratios[i] * static_cast<double>(n);
    counts[i] = static_cast<std::size_t>(std::floor(exact));
    remainders[i] = exact - std::floor(exact);
    assigned += counts[i];
  }
  while (assigned < n) {
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (remainders[i] > remainders[best]) best = i;
    ++counts[best];
    remainders[best] = -1.0;
    ++assigned;
  }
  for (int i = 0; i < 3; ++i) {
    if (counts[i] > 0) continue;
    int largest = 0;
    for (int j = 1; j < 3; ++j)
      if (counts[j] > counts[largest]) largest = j;
    --counts[largest];
    ++counts[i];
  }
  return counts;
}

}  // namespace

DatasetSplit split_by_repository(const std::vector<RepaymentSample>& samples,
                                 std::array<double, 3> ratios, long long seed) {
  double sum = ratios[0] + ratios[1] + ratios[2];
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("split ratios must sum to 1");

  std::set<std::string> repo_set;
  for (const auto& s : samples) repo_set.insert(s.record.project);
  std::vector<std::string> repos(repo_set.begin(), repo_set.end());
  if (repos.size() < 3)
    throw SplitImpossible("repository-wise split needs at least 3 repositories, got " +
                          std::to_string(repos.size()));

  auto state = static_cast<std::uint64_t>(seed);
  for (std::size_t i = repos.size() - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(next_random(state) % (i + 1));
    std::swap(repos[i], repos[j]);
  }

  std::array<std::size_t, 3> counts = bucket_counts(repos.size(), ratios);
  std::unordered_map<std::string, int> bucket_of;
  std::size_t idx = 0;
  for (int b = 0; b < 3; ++b)
    for (std::size_t k = 0; k < counts[static_cast<std::size_t>(b)]; ++k)
      bucket_of[repos[idx++]] = b;

  DatasetSplit split;
  split.seed = seed;
  for (const auto& s : samples) {
    switch (bucket_of.at(s.record.project)) {
      case 0: split.train.push_back(s); break;
      case 1: split.validation.push_back(s); break;
      default: split.test.push_back(s); break;
    }
  }
  return split;
}

}  // namespace satdforge::pipeline
