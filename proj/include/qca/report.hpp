#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace qca {

struct CheckResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  std::string first_failure;
  long first_ordinal = -1;

  bool ok() const { return failed == 0; }
};

/// Pass/fail tallies per named check. record() may be called concurrently.
/// When callers pass ordinals, the kept counterexample is the one with the
/// smallest ordinal, so reports do not depend on thread scheduling.
class Report {
public:
  Report() : mu_(std::make_unique<std::mutex>()) {}
  Report(const Report& o) : mu_(std::make_unique<std::mutex>()), checks_(o.checks_) {}
  Report& operator=(const Report& o) {
    checks_ = o.checks_;
    return *this;
  }
  Report(Report&&) = default;
  Report& operator=(Report&&) = default;

  void record(const std::string& check, bool ok, const std::string& detail = {}, long ordinal = -1);
  void merge(const Report& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& check) const;
  long passed() const;
  long failed() const;
  bool ok() const { return failed() == 0; }

  /// One line per check: "PASS  name  (12 cases)" or "FAIL  name  (2/12 failed) first: ...".
  std::string text() const;
  /// {"passed":..,"failed":..,"checks":[{"name","passed","failed","first_failure"}]}.
  std::string machine() const;

private:
  CheckResult& slot(const std::string& check);

  std::unique_ptr<std::mutex> mu_;
  std::vector<CheckResult> checks_;
};

}  // namespace qca
