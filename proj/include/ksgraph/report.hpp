#pragma once

#include <string>
#include <vector>

namespace ksg {

struct CheckResult {
  std::string name;
  bool pass = false;
  /// First counterexample coordinates / values when the check failed.
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace ksg
