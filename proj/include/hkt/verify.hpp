#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hkt/catalog.hpp"

namespace hkt {

struct CheckLine {
  std::string label;
  std::string expected;
  std::string computed;
  bool pass;
};

struct CaseResult {
  std::string name;
  std::vector<CheckLine> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::vector<std::string> verifyCaseNames();

/// Runs one verification case; throws ValidationError on an unknown name.
CaseResult runVerifyCase(const std::string& name);

/// Runs all cases (or one, when filter is nonempty) and prints one line per
/// check plus one summary line per case. Returns true when everything passed.
bool runVerification(std::ostream& os, const std::string& filter = "");

}  // namespace hkt
