#include "satdforge/pipeline/sample.hpp"

namespace satdforge::pipeline {

std::string sample_key(const RepaymentSample& sample) {
  const track::SatdRecord& r = sample.record;
  return r.project + ":" + r.deletion_commit.value_or("-") + ":" +
         r.file_path + ":" +
         std::to_string(r.line_before_deletion.value_or(0));
}

}  // namespace satdforge::pipeline
