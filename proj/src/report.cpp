#include "germkit/report.hpp"

#include <algorithm>

namespace germkit {

bool Report::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name)
      return &c;
  return nullptr;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed)
      return &c;
  return nullptr;
}

CheckResult& Report::add(CheckResult result) {
  checks_.push_back(std::move(result));
  return checks_.back();
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void Report::render(std::ostream& os) const {
  if (!title_.empty())
    os << "[" << title_ << "]\n";
  for (const auto& c : checks_) {
    os << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << " (" << c.checked << (c.checked == 1 ? " case)" : " cases)");
    if (!c.detail.empty())
      os << " : " << c.detail;
    os << "\n";
    if (!c.passed)
      os << "        witness: " << c.witness << "\n";
  }
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["title"] = title_;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["checked"] = c.checked;
    if (!c.detail.empty())
      e["detail"] = c.detail;
    if (!c.passed)
      e["witness"] = c.witness;
    arr.push_back(std::move(e));
  }
  j["checks"] = std::move(arr);
  return j;
}

} // namespace germkit
