// Check records shared by the verification suites, the acceptance binary
// and the command-line tool.
#pragma once

#include <string>
#include <vector>

namespace mqg {

struct CheckRecord {
  std::string id;
  bool passed = false;
  std::string witness;  // printable counterexample when failed
};

struct Report {
  std::string suite;
  std::string type;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckRecord> records;
  double seconds = 0;

  void add(std::string id, bool passed, std::string witness = {}) {
    records.push_back({std::move(id), passed, passed ? std::string() : std::move(witness)});
  }
  void append(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }
  bool passed() const {
    for (const auto& r : records)
      if (!r.passed) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& r : records) n += !r.passed;
    return n;
  }
};

}  // namespace mqg
