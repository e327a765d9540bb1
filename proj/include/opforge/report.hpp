#pragma once
#include <string>
#include <vector>

namespace opforge {

// Verification outcome carrier. `skipped` marks hypothesis-out-of-scope items
// (e.g. a tree above a configuration's index): not a failure, but recorded.
struct CheckResult {
  enum Status { pass, fail, skipped };
  std::string label;
  Status status = pass;
  std::string witness;  // failing tuple / tree / J, empty on pass
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add_pass(std::string label) { checks.push_back({std::move(label), CheckResult::pass, ""}); }
  void add_fail(std::string label, std::string witness) {
    checks.push_back({std::move(label), CheckResult::fail, std::move(witness)});
  }
  void add_skip(std::string label, std::string why) {
    checks.push_back({std::move(label), CheckResult::skipped, std::move(why)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) {
      CheckResult copy = c;
      if (!other.title.empty()) copy.label = other.title + ": " + copy.label;
      checks.push_back(std::move(copy));
    }
  }
  bool ok() const {
    for (const auto& c : checks)
      if (c.status == CheckResult::fail) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& c : checks) n += c.status == CheckResult::fail;
    return n;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (c.status == CheckResult::fail) return &c;
    return nullptr;
  }
};

}  // namespace opforge
