#ifndef GERMKIT_REPORT_HPP
#define GERMKIT_REPORT_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace germkit {

/// Outcome of one exhaustive check. `witness` names the first counterexample
/// (smallest canonical indices first) and is empty when the check passed.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;
  std::string detail;
};

/// An ordered list of checks. Order is significant: reports are rendered in
/// insertion order so identical inputs give byte-identical output.
class Report {
public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  /// First failing check or nullptr.
  const CheckResult* first_failure() const;

  CheckResult& add(CheckResult result);
  void append(const Report& other);

  void render(std::ostream& os) const;
  nlohmann::ordered_json to_json() const;

private:
  std::string title_;
  std::vector<CheckResult> checks_;
};

/// Accumulates a single check: counts cases and keeps the first failure.
class CheckBuilder {
public:
  explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

  /// Records one case. Only the first failing witness is kept.
  template <class WitnessFn>
  bool expect(bool ok, WitnessFn&& witness) {
    ++result_.checked;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.witness = witness();
    }
    return ok;
  }

  void fail(std::string witness) {
    if (result_.passed) {
      result_.passed = false;
      result_.witness = std::move(witness);
    }
  }

  void set_detail(std::string detail) { result_.detail = std::move(detail); }
  bool passed() const { return result_.passed; }
  CheckResult finish() && { return std::move(result_); }

private:
  CheckResult result_;
};

} // namespace germkit

#endif // GERMKIT_REPORT_HPP
