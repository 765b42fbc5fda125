#pragma once

#include <string>
#include <utility>
#include <vector>

#include "reeskit/ideal.hpp"

namespace reeskit {

enum class Status { pass, fail, unresolved };

std::string to_string(Status s);

/// Deterministic `key = value` text report with a trailing status line.
/// A failed expectation adds the line "expected <key> = <want>, got <have>".
class Report {
public:
  void add(std::string key, std::string value);
  /// Records the computed value under `key`; a mismatch adds a failure line.
  bool expect(const std::string& key, const std::string& expected, const std::string& got);
  void mark_failed() { failed_ = true; }
  void mark_unresolved() { unresolved_ = true; }

  Status status() const noexcept;
  /// 0 pass, 2 expectation failure, 3 unresolved.
  int exit_code() const noexcept;
  const std::vector<std::pair<std::string, std::string>>& lines() const noexcept { return lines_; }
  std::string str() const;

private:
  std::vector<std::pair<std::string, std::string>> lines_;
  std::vector<std::string> failures_;
  bool failed_ = false;
  bool unresolved_ = false;
};

/// "[g1, g2, ...]" from the reduced basis, in basis order.
std::string format_ideal(const Ideal& I);
std::string format_bool(bool b);

}  // namespace reeskit
