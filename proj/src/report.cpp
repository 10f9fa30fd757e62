#include "qca/report.hpp"

#include <json.hpp>
#include <sstream>

namespace qca {

CheckResult& Report::slot(const std::string& check) {
  for (auto& c : checks_)
    if (c.name == check) return c;
  CheckResult fresh;
  fresh.name = check;
  checks_.push_back(fresh);
  return checks_.back();
}

void Report::record(const std::string& check, bool ok, const std::string& detail, long ordinal) {
  std::lock_guard lock(*mu_);
  CheckResult& c = slot(check);
  if (ok) {
    ++c.passed;
    return;
  }
  ++c.failed;
  if (ordinal < 0) ordinal = c.passed + c.failed;
  if (c.first_ordinal < 0 || ordinal < c.first_ordinal) {
    c.first_ordinal = ordinal;
    c.first_failure = detail;
  }
}

void Report::merge(const Report& other) {
  std::lock_guard lock(*mu_);
  for (const auto& o : other.checks_) {
    CheckResult& c = slot(o.name);
    c.passed += o.passed;
    c.failed += o.failed;
    if (o.first_ordinal >= 0 && (c.first_ordinal < 0 || o.first_ordinal < c.first_ordinal)) {
      c.first_ordinal = o.first_ordinal;
      c.first_failure = o.first_failure;
    }
  }
}

const CheckResult* Report::find(const std::string& check) const {
  for (const auto& c : checks_)
    if (c.name == check) return &c;
  return nullptr;
}

long Report::passed() const {
  long s = 0;
  for (const auto& c : checks_) s += c.passed;
  return s;
}

long Report::failed() const {
  long s = 0;
  for (const auto& c : checks_) s += c.failed;
  return s;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    const long total = c.passed + c.failed;
    if (c.ok()) {
      os << "PASS  " << c.name << "  (" << total << (total == 1 ? " case" : " cases") << ")\n";
    } else {
      os << "FAIL  " << c.name << "  (" << c.failed << "/" << total << " failed)";
      if (!c.first_failure.empty()) os << " first: " << c.first_failure;
      os << "\n";
    }
  }
  os << (ok() ? "all checks passed" : "some checks failed") << ": " << passed() << " passed, " << failed()
     << " failed\n";
  return os.str();
}

std::string Report::machine() const {
  nlohmann::json j;
  j["passed"] = passed();
  j["failed"] = failed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json e{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}};
    if (!c.ok()) e["first_failure"] = c.first_failure;
    j["checks"].push_back(e);
  }
  return j.dump();
}

}  // namespace qca
