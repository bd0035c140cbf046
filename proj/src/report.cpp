#include "rbs/report.h"

#include <algorithm>

namespace rbs {

void Report::add(std::string name, bool passed, std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(detail)});
}

void Report::merge(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::size_t Report::passed_count() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; }));
}

std::size_t Report::failed_count() const { return checks_.size() - passed_count(); }

const Check* Report::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; });
  return it == checks_.end() ? nullptr : &*it;
}

void Tally::record(bool ok, const std::string& what) {
  ++total_;
  if (ok) return;
  if (failures_ == 0) first_failure_ = what;
  ++failures_;
}

void Tally::commit(Report& report) const {
  std::string detail = std::to_string(total_ - failures_) + "/" + std::to_string(total_) + " exact";
  if (failures_ != 0) detail += "; first failure: " + first_failure_;
  report.add(name_, failures_ == 0, std::move(detail));
}

}  // namespace rbs
