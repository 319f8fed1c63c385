#pragma once

#include <string>
#include <vector>

namespace disep {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::string> witnesses;
};

/// A formula as printed next to the one computed from first principles.
struct PrintedDiff {
  std::string name;
  std::string printed;
  std::string computed;
  std::string difference;  ///< computed - printed, or a note when the comparison is up to scalar
  bool matches = false;
};

struct Report {
  std::vector<Check> checks;
  std::vector<PrintedDiff> printed_diffs;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  void add(Check c) { checks.push_back(std::move(c)); }
  void add(std::string name, bool ok, std::string detail = {}, std::vector<std::string> witnesses = {}) {
    checks.push_back(Check{std::move(name), ok, std::move(detail), std::move(witnesses)});
  }
  /// Appends another report, prefixing its check names.
  void merge(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
    for (auto d : other.printed_diffs) {
      d.name = prefix + d.name;
      printed_diffs.push_back(std::move(d));
    }
  }
};

}  // namespace disep
