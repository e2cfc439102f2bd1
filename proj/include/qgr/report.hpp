// Outcome of a verification run: one entry per checked item, with the
// residual printed when it is nonzero.
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qgr {

struct CheckEntry {
  std::string label;
  bool pass = true;
  /// "0" when the check passed, otherwise a printed residual or message.
  std::string residual = "0";
};

struct Report {
  std::string command;
  /// Ordered key/value description of the configuration.
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckEntry> entries;

  void add(std::string label, bool pass, std::string residual = "0") {
    entries.push_back({std::move(label), pass, pass ? "0" : std::move(residual)});
  }
  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  int residual_count() const {
    int k = 0;
    for (const auto& e : entries) k += e.pass ? 0 : 1;
    return k;
  }
};

}  // namespace qgr
