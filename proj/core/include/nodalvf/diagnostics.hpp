#pragma once

#include <string>
#include <vector>

namespace nvf {

struct Failure {
  std::string check;
  std::string location;
  std::string message;
};

// Pass/fail report; pass() holds exactly when no failure was recorded.
class Diagnostics {
 public:
  bool pass() const { return failures_.empty(); }
  const std::vector<Failure>& failures() const { return failures_; }

  void fail(std::string check, std::string location, std::string message) {
    failures_.push_back({std::move(check), std::move(location), std::move(message)});
  }
  void merge(const Diagnostics& other) {
    failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
  }
  bool has(const std::string& check) const {
    for (const auto& f : failures_)
      if (f.check == check) return true;
    return false;
  }

  std::string str() const {
    if (pass()) return "PASS";
    std::string s = "FAIL";
    for (const auto& f : failures_) s += "\n  [" + f.check + "] " + f.location + ": " + f.message;
    return s;
  }

 private:
  std::vector<Failure> failures_;
};

}  // namespace nvf
