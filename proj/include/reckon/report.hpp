// Task reports with a human-readable text rendering and a machine-readable
// JSON rendering. The JSON form is deterministic (fixed key order, no
// timing); wall time appears only in the text rendering.
#pragma once

#include "reckon/check.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace reckon {

struct Report {
  std::string task;
  std::string instance;
  std::string field_name;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<VerifyReport> sections;

  bool pass() const {
    for (const auto& s : sections)
      if (!s.pass()) return false;
    return true;
  }

  std::string to_text(double seconds = -1.0) const {
    std::ostringstream os;
    os << "task: " << task << "\n";
    os << "instance: " << instance << "\n";
    os << "field: " << field_name << "\n";
    for (const auto& [k, v] : metadata) os << k << ": " << v << "\n";
    for (const auto& s : sections) {
      os << "-- " << s.title << " [" << (s.pass() ? "PASS" : "FAIL") << "]\n";
      for (const auto& e : s.entries) {
        os << "   " << (e.pass ? "ok  " : "FAIL") << " " << e.name;
        if (!e.detail.empty()) os << "  (" << e.detail << ")";
        os << "\n";
      }
    }
    os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    if (seconds >= 0) os << "time: " << seconds << " s\n";
    return os.str();
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = "reckon";
    j["task"] = task;
    j["instance"] = instance;
    j["field"] = field_name;
    for (const auto& [k, v] : metadata) j["meta"][k] = v;
    j["sections"] = nlohmann::ordered_json::array();
    for (const auto& s : sections) {
      nlohmann::ordered_json js;
      js["title"] = s.title;
      js["pass"] = s.pass();
      js["checks"] = nlohmann::ordered_json::array();
      for (const auto& e : s.entries) {
        nlohmann::ordered_json je;
        je["name"] = e.name;
        je["pass"] = e.pass;
        if (!e.detail.empty()) je["detail"] = e.detail;
        js["checks"].push_back(je);
      }
      j["sections"].push_back(js);
    }
    j["pass"] = pass();
    return j.dump(2) + "\n";
  }
};

}  // namespace reckon
