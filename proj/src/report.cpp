#include "reeskit/report.hpp"

#include <sstream>

namespace reeskit {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unresolved: return "unresolved";
  }
  return "fail";
}

void Report::add(std::string key, std::string value) { lines_.emplace_back(std::move(key), std::move(value)); }

bool Report::expect(const std::string& key, const std::string& expected, const std::string& got) {
  add(key, got);
  if (expected == got) return true;
  failures_.push_back("expected " + key + " = " + expected + ", got " + got);
  failed_ = true;
  return false;
}

Status Report::status() const noexcept {
  if (failed_) return Status::fail;
  if (unresolved_) return Status::unresolved;
  return Status::pass;
}

int Report::exit_code() const noexcept {
  switch (status()) {
    case Status::pass: return 0;
    case Status::fail: return 2;
    case Status::unresolved: return 3;
  }
  return 2;
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto& [k, v] : lines_) os << k << " = " << v << "\n";
  for (const auto& f : failures_) os << f << "\n";
  os << "status = " << to_string(status()) << "\n";
  return os.str();
}

std::string format_ideal(const Ideal& I) {
  std::string out = "[";
  const auto& els = I.groebner().elements();
  for (std::size_t i = 0; i < els.size(); ++i) out += (i ? ", " : "") + els[i].str();
  return out + "]";
}

std::string format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace reeskit
