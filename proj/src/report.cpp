#include "hermring/report.hpp"

#include <sstream>

namespace hermring {

void Report::pass(std::string name, bool rigorous, std::string detail) {
  add({std::move(name), CheckResult::Status::Pass, rigorous, std::move(detail)});
}

void Report::fail(std::string name, std::string detail, bool rigorous) {
  add({std::move(name), CheckResult::Status::Fail, rigorous, std::move(detail)});
}

void Report::skip(std::string name, std::string detail) {
  add({std::move(name), CheckResult::Status::Skip, false, std::move(detail)});
}

void Report::info(std::string name, std::string detail) {
  add({std::move(name), CheckResult::Status::Info, false, std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
}

int Report::passes() const {
  int n = 0;
  for (const auto& c : checks_)
    if (c.status == CheckResult::Status::Pass) ++n;
  return n;
}

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks_)
    if (c.status == CheckResult::Status::Fail) ++n;
  return n;
}

int Report::rigorous_count() const {
  int n = 0;
  for (const auto& c : checks_)
    if (c.rigorous && c.status == CheckResult::Status::Pass) ++n;
  return n;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    switch (c.status) {
      case CheckResult::Status::Pass:
        os << c.name << " PASS" << (c.rigorous ? " [rigorous]" : "");
        break;
      case CheckResult::Status::Fail:
        os << c.name << " FAIL";
        break;
      case CheckResult::Status::Skip:
        os << c.name << " SKIP";
        break;
      case CheckResult::Status::Info:
        os << c.name << " INFO";
        break;
    }
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
  os << "TOTAL pass=" << passes() << " fail=" << failures()
     << " rigorous=" << rigorous_count() << "\n";
  return os.str();
}

}  // namespace hermring
