#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rbs {

struct Check {
  std::string name;
  bool passed = true;
  /// Exact scalar(s) or the first counterexample.
  std::string detail;
};

/// Ordered list of named pass/fail checks.
class Report {
 public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = {});
  void merge(const Report& other);

  const std::string& title() const noexcept { return title_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::size_t passed_count() const;
  std::size_t failed_count() const;
  bool all_passed() const { return failed_count() == 0; }
  const Check* first_failure() const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

/// Accumulates many exact comparisons under one check name, keeping the
/// count and the first counterexample.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}

  void record(bool ok, const std::string& what);
  void commit(Report& report) const;
  bool ok() const noexcept { return failures_ == 0; }
  std::size_t count() const noexcept { return total_; }

 private:
  std::string name_;
  std::size_t total_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

}  // namespace rbs
