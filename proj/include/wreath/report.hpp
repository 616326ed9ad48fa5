#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wreath/linmap.hpp"

namespace wreath {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // empty when passing
};

/// Ordered list of named checks plus named values. Order of insertion is
/// preserved in rendering.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const std::vector<std::pair<std::string, std::string>>& values() const { return values_; }

  bool ok() const;
  std::size_t passed() const;
  std::size_t failed() const { return checks_.size() - passed(); }
  std::vector<CheckResult> failures() const;
  /// The named check, or nullptr.
  const CheckResult* find(const std::string& name) const;
  const std::string* value(const std::string& key) const;

  void add(std::string name, bool pass, std::string witness = {});
  /// Records whether lhs == rhs, with the first differing entry as witness.
  bool add_equal(std::string name, const LinMap& lhs, const LinMap& rhs);
  void set(std::string key, std::string value);
  void set(std::string key, std::size_t value) { set(std::move(key), std::to_string(value)); }
  void set(std::string key, bool value) { set(std::move(key), std::string(value ? "true" : "false")); }
  void set(std::string key, const char* value) { set(std::move(key), std::string(value)); }
  /// Appends the checks and values of r, prefixing their names.
  void merge(const std::string& prefix, const Report& r);

  std::string to_text() const;

 private:
  std::string title_;
  std::vector<CheckResult> checks_;
  std::vector<std::pair<std::string, std::string>> values_;
};

/// Witness string for lhs != rhs, or empty when equal.
std::string equality_witness(const LinMap& lhs, const LinMap& rhs);

}  // namespace wreath
