#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "satdforge/pipeline/sample.hpp"

namespace satdforge::pipeline {

struct SplitImpossible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatasetSplit {
  std::vector<RepaymentSample> train;
  std::vector<RepaymentSample> validation;
  std::vector<RepaymentSample> test;
  long long seed = 0;
};

// Repository-wise split: repositories (by project) are shuffled
// deterministically by seed and assigned to buckets by count ratio, so no
// repository spans buckets. Throws SplitImpossible with fewer than three
// repositories.
DatasetSplit split_by_repository(const std::vector<RepaymentSample>& samples,
                                 std::array<double, 3> ratios, long long seed);

inline DatasetSplit split_by_repository(
    const std::vector<RepaymentSample>& samples, long long seed) {
  return split_by_repository(samples, {0.85, 0.05, 0.10}, seed);
}

}  // namespace satdforge::pipeline
