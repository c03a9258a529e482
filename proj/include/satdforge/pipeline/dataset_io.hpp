#pragma once

#include <filesystem>
#include <stdexcept>
#include <vector>

#include "satdforge/pipeline/sample.hpp"
#include "satdforge/track/record.hpp"

namespace satdforge::pipeline {

struct DatasetParseError : std::runtime_error {
  DatasetParseError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_number(line) {}
  int line_number;
};

// Line-delimited JSON with the schema fields user, project, file_path,
// creation_commit, deletion_commit, line_at_creation, line_before_deletion,
// satd_comment, language (records) plus method_before, method_after
// (samples). Round trips are identity; writes are atomic.

void write_records(const std::vector<track::SatdRecord>& records,
                   const std::filesystem::path& path);
std::vector<track::SatdRecord> read_records(const std::filesystem::path& path);

void write_dataset(const std::vector<RepaymentSample>& samples,
                   const std::filesystem::path& path);
std::vector<RepaymentSample> read_dataset(const std::filesystem::path& path);

// Two-column (step_name, count) stats table.
void write_stats(const std::vector<std::pair<std::string, std::size_t>>& rows,
                 const std::filesystem::path& path);

}  // namespace satdforge::pipeline
