#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "satdforge/metrics/scores.hpp"

namespace satdforge::harness {

struct ItemResult {
  std::string sample_key;
  std::string generated_raw;
  std::string extracted_code;
  metrics::MetricReport report;
};

// One (model, template) experiment over a dataset.
struct ExperimentRun {
  std::string model_id;
  std::string template_name;
  std::string dataset_id;
  std::vector<ItemResult> items;
};

void write_run(const ExperimentRun& run, const std::filesystem::path& path);
ExperimentRun read_run(const std::filesystem::path& path);

}  // namespace satdforge::harness
