#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stabledeg {

enum class Scale {
  smoke,  // reduced sizes, seconds
  full,   // the acceptance sizes and tolerances
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

// Runs one acceptance check (1..10). Never throws: a library error is
// reported as a failure with its message.
CriterionResult run_criterion(int id, Scale scale, std::uint64_t seed = 1);

std::vector<CriterionResult> verify_suite(
    Scale scale, std::uint64_t seed = 1,
    const std::function<void(const CriterionResult&)>& on_result = {});

// "criterion 3 (components): PASS [1.2 s] <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace stabledeg
