#pragma once

#include <string>
#include <vector>

namespace w3oct {

// One verification result. `name` is a stable slug describing the verified
// property, so report lines are greppable and machine-diffable.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool allPass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return true;
}

inline std::string formatCheck(const Check& c) {
  std::string line = c.pass ? "[PASS] " : "[FAIL] ";
  line += c.name;
  if (!c.detail.empty()) {
    line += ": ";
    line += c.detail;
  }
  return line;
}

inline std::string formatChecks(const std::vector<Check>& cs) {
  std::string out;
  for (const auto& c : cs) {
    out += formatCheck(c);
    out += '\n';
  }
  return out;
}

}  // namespace w3oct
