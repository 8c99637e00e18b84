#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace qtchar {

// One acceptance criterion: an exact, self-contained check.  run() returns
// pass/fail and may write diagnostic detail to the log.
struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::ostream& log)> run;
};

const std::vector<Criterion>& acceptance_criteria();

// Runs every criterion whose name contains the filter (all when empty),
// printing one "PASS"/"FAIL" line per criterion.  Returns the failure count.
int run_selftest(const std::string& filter, std::ostream& out);

}  // namespace qtchar
