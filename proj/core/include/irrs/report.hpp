#pragma once

#include <string>

#include "irrs/dense.hpp"
#include "irrs/exact.hpp"

namespace irrs {

// JSON text for machine-readable reports. Timing is emitted under a separate
// "timing" key only when include_timing is set, so reproducibility checks can
// byte-compare everything else.
std::string solve_report_json(const SolveReport& rep, bool include_timing = true);
std::string exact_result_json(const ExactResult& res, bool include_timing = true);

const char* outcome_name(SolveReport::Outcome o);
const char* outcome_name(ExactResult::Outcome o);

}  // namespace irrs
