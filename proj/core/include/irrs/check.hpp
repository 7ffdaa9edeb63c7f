#pragma once

#include <stdexcept>
#include <string>

namespace irrs {

// Always-on internal contract check; these guard algorithm invariants whose
// violation would mean a bug, not bad input.
[[noreturn]] inline void check_failed(const char* expr, const std::string& msg) {
  throw std::logic_error("invariant violated (" + std::string(expr) + "): " + msg);
}

}  // namespace irrs

#define IRRS_CHECK(cond, msg)                      \
  do {                                             \
    if (!(cond)) ::irrs::check_failed(#cond, msg); \
  } while (0)
