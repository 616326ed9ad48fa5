#include "wreath/report.hpp"

#include <algorithm>
#include <sstream>

namespace wreath {

bool Report::ok() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const auto& c) { return c.pass; });
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const auto& c) { return c.pass; }));
}

std::vector<CheckResult> Report::failures() const {
  std::vector<CheckResult> f;
  for (const auto& c : checks_) {
    if (!c.pass) f.push_back(c);
  }
  return f;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::string* Report::value(const std::string& key) const {
  for (const auto& [k, v] : values_) {
    if (k == key) return &v;
  }
  return nullptr;
}

void Report::add(std::string name, bool pass, std::string witness) {
  checks_.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
}

bool Report::add_equal(std::string name, const LinMap& lhs, const LinMap& rhs) {
  std::string w = equality_witness(lhs, rhs);
  const bool pass = w.empty();
  add(std::move(name), pass, std::move(w));
  return pass;
}

void Report::set(std::string key, std::string value) {
  for (auto& [k, v] : values_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  values_.emplace_back(std::move(key), std::move(value));
}

void Report::merge(const std::string& prefix, const Report& r) {
  const std::string p = prefix.empty() ? std::string() : prefix + ".";
  for (const auto& c : r.checks_) checks_.push_back({p + c.name, c.pass, c.witness});
  for (const auto& [k, v] : r.values_) set(p + k, v);
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title_.empty()) os << title_ << "\n";
  for (const auto& c : checks_) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass && !c.witness.empty()) os << "  -- " << c.witness;
    os << "\n";
  }
  for (const auto& [k, v] : values_) os << "  " << k << ": " << v << "\n";
  os << "  result: " << (ok() ? "pass" : "fail") << " (" << passed() << "/" << checks_.size()
     << " checks)\n";
  return os.str();
}

std::string equality_witness(const LinMap& lhs, const LinMap& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    return "dimension mismatch " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) +
           " vs " + std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols());
  }
  const auto d = first_difference(lhs, rhs);
  return d ? describe(*d, lhs) : std::string();
}

}  // namespace wreath
