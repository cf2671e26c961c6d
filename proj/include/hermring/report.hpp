#pragma once

#include <string>
#include <vector>

namespace hermring {

// One verification line. `rigorous` marks checks certified exact by a Sturm
// vanishing bound at the working truncation (vs consistent-at-truncation).
struct CheckResult {
  enum class Status { Pass, Fail, Skip, Info };
  std::string name;
  Status status = Status::Pass;
  bool rigorous = false;
  std::string detail;
};

class Report {
 public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void pass(std::string name, bool rigorous = false, std::string detail = {});
  void fail(std::string name, std::string detail, bool rigorous = false);
  void skip(std::string name, std::string detail);
  void info(std::string name, std::string detail);
  void merge(const Report& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  int passes() const;
  int failures() const;
  int rigorous_count() const;
  bool ok() const { return failures() == 0; }

  // One line per check plus the machine-readable summary line
  // "TOTAL pass=<a> fail=<b> rigorous=<c>".
  std::string to_text() const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace hermring
