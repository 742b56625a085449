#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace isogame {

using json = nlohmann::json;

// one bound a record claims to meet: values[field] op value with op in
// {"eq", "le", "ge"}
struct Constraint {
  std::string field;
  std::string op;
  long value = 0;
};

// One verified fact about one graph. Everything needed to recheck the claim
// is stored: the graph itself (graph6), the measured values, how they were
// produced (attrs like policy/first) and the bounds they must meet.
struct Record {
  std::string source;  // generator spec or input file
  std::string graph6;
  int n = 0;
  std::map<std::string, long> values;
  std::map<std::string, std::string> attrs;
  std::vector<Constraint> expected;
  bool pass = true;
  bool skipped = false;
};

// evaluates the constraints against the stored values
bool meets_expected(const Record& r);

struct Report {
  std::string experiment;
  json params = json::object();
  std::vector<Record> records;
  json summary = json::object();
  long runtime_ms = 0;

  // fills summary counts from the records, keeping any findings already set
  void finalize();
  bool all_passed() const;

  json to_json() const;
  static Report from_json(const json& j);
  std::string to_csv() const;
  std::string to_text() const;
};

}  // namespace isogame
