// Small result types shared by the verification layers: named checks with a
// pass flag and printable detail, grouped into reports.
#pragma once

#include <string>
#include <vector>

namespace reckon {

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string title;
  std::vector<CheckEntry> entries;

  bool pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::string detail = "") {
    entries.push_back({std::move(name), ok, std::move(detail)});
  }
  void merge(const VerifyReport& other) {
    for (const auto& e : other.entries) entries.push_back(e);
  }
};

}  // namespace reckon
