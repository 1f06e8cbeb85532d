#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace thompson {

/// Outcome of one named identity or property check.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of checks; verification routines never throw on a failed
/// identity, they record it here.
class Report {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }

  void append(Report const& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  std::vector<Check> const& checks() const noexcept { return checks_; }
  std::size_t size() const noexcept { return checks_.size(); }

  std::size_t failures() const noexcept {
    std::size_t n = 0;
    for (auto const& c : checks_) {
      n += c.passed ? 0 : 1;
    }
    return n;
  }

  bool ok() const noexcept { return failures() == 0; }

  /// One line per check, then a summary line.
  void print(std::ostream& os) const {
    for (auto const& c : checks_) {
      os << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) {
        os << ": " << c.detail;
      }
      os << '\n';
    }
    os << (ok() ? "OK " : "FAILED ") << (size() - failures()) << '/' << size()
       << " checks passed\n";
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace thompson
