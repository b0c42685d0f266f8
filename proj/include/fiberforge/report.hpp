#pragma once

#include <string>
#include <vector>

namespace fiberforge {

enum class CheckStatus { Pass, Fail, Flag, Skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Flag: return "FLAG";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

/// One line of a verification report: expected and actual rendered as text.
struct CheckLine {
  std::string name;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Pass;
  double elapsed = 0.0;
  bool optional = false;
  std::string note;

  std::string text() const {
    std::string out = name + ": " + actual + " = " + expected + " " + to_string(status);
    if (!note.empty()) out += " (" + note + ")";
    return out;
  }
};

inline CheckLine check_equal(std::string name, long long expected, long long actual) {
  CheckLine line;
  line.name = std::move(name);
  line.expected = std::to_string(expected);
  line.actual = std::to_string(actual);
  line.status = expected == actual ? CheckStatus::Pass : CheckStatus::Fail;
  return line;
}

inline CheckLine check_true(std::string name, bool ok, std::string note = {}) {
  CheckLine line;
  line.name = std::move(name);
  line.expected = "true";
  line.actual = ok ? "true" : "false";
  line.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  line.note = std::move(note);
  return line;
}

inline CheckLine make_line(std::string name, std::string expected, std::string actual, CheckStatus status) {
  CheckLine line;
  line.name = std::move(name);
  line.expected = std::move(expected);
  line.actual = std::move(actual);
  line.status = status;
  return line;
}

inline bool all_required_pass(const std::vector<CheckLine>& lines) {
  for (const auto& l : lines) {
    if (l.status == CheckStatus::Fail) return false;
  }
  return true;
}

}  // namespace fiberforge
