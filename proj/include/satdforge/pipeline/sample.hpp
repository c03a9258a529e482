#pragma once

#include <string>

#include "satdforge/track/record.hpp"

namespace satdforge::pipeline {

// One dataset row: a filtered SATD with the containing method before and
// after repayment.
struct RepaymentSample {
  track::SatdRecord record;    // deletion fields always present here
  std::string method_before;   // includes the SATD comment
  std::string method_after;

  bool operator==(const RepaymentSample&) const = default;
};

// Stable identity of a sample inside one dataset.
std::string sample_key(const RepaymentSample& sample);

}  // namespace satdforge::pipeline
