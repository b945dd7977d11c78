#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace arcline::cli {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = false;
  std::string detail;  // first failure, empty on success
};

/// Worker count for verify: ARCLINE_THREADS if set to a positive integer,
/// else the hardware concurrency, never below 1.
unsigned thread_cap();

/// Runs every cross-module check for ambient dimensions up to max_ambient on
/// at most `threads` workers. Results come back in a fixed order.
std::vector<CheckResult> run_verify(unsigned max_ambient, unsigned threads);

}  // namespace arcline::cli
