#pragma once

#include <string>
#include <vector>

namespace ellhelix {

// One named pass/fail check with the compared values as display strings.
struct CheckResult {
  std::string check;
  bool pass;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string check, bool pass, std::string expected, std::string actual) {
    checks.push_back({std::move(check), pass, std::move(expected), std::move(actual)});
  }
};

}  // namespace ellhelix
