#include "isogame/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace isogame {

bool meets_expected(const Record& r) {
  for (const Constraint& c : r.expected) {
    auto it = r.values.find(c.field);
    if (it == r.values.end()) return false;
    long got = it->second;
    bool ok = c.op == "eq"   ? got == c.value
              : c.op == "le" ? got <= c.value
              : c.op == "ge" ? got >= c.value
                             : false;
    if (!ok) return false;
  }
  return true;
}

void Report::finalize() {
  long total = 0, passed = 0, failed = 0, skipped = 0;
  for (const Record& r : records) {
    ++total;
    if (r.skipped)
      ++skipped;
    else if (r.pass)
      ++passed;
    else
      ++failed;
  }
  summary["total"] = total;
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["skipped"] = skipped;
  if (!summary.contains("findings")) summary["findings"] = json::array();
}

bool Report::all_passed() const {
  if (!std::all_of(records.begin(), records.end(),
                   [](const Record& r) { return r.pass || r.skipped; }))
    return false;
  if (summary.contains("checks"))
    for (const json& c : summary["checks"])
      if (!c.value("pass", false)) return false;
  return true;
}

json Report::to_json() const {
  json j;
  j["experiment"] = experiment;
  j["params"] = params;
  j["records"] = json::array();
  for (const Record& r : records) {
    json jr;
    jr["source"] = r.source;
    jr["graph6"] = r.graph6;
    jr["n"] = r.n;
    jr["values"] = r.values;
    jr["attrs"] = r.attrs;
    jr["expected"] = json::array();
    for (const Constraint& c : r.expected)
      jr["expected"].push_back({{"field", c.field}, {"op", c.op}, {"value", c.value}});
    jr["pass"] = r.pass;
    jr["skipped"] = r.skipped;
    j["records"].push_back(std::move(jr));
  }
  j["summary"] = summary;
  j["runtime_ms"] = runtime_ms;
  return j;
}

Report Report::from_json(const json& j) {
  Report rep;
  rep.experiment = j.at("experiment").get<std::string>();
  rep.params = j.value("params", json::object());
  for (const json& jr : j.at("records")) {
    Record r;
    r.source = jr.value("source", "");
    r.graph6 = jr.at("graph6").get<std::string>();
    r.n = jr.at("n").get<int>();
    if (jr.contains("values"))
      for (auto& [k, v] : jr["values"].items()) r.values[k] = v.get<long>();
    if (jr.contains("attrs"))
      for (auto& [k, v] : jr["attrs"].items()) r.attrs[k] = v.get<std::string>();
    if (jr.contains("expected"))
      for (const json& jc : jr["expected"])
        r.expected.push_back(Constraint{jc.at("field").get<std::string>(),
                                        jc.at("op").get<std::string>(),
                                        jc.at("value").get<long>()});
    r.pass = jr.value("pass", true);
    r.skipped = jr.value("skipped", false);
    rep.records.push_back(std::move(r));
  }
  rep.summary = j.value("summary", json::object());
  rep.runtime_ms = j.value("runtime_ms", 0L);
  return rep;
}

std::string Report::to_csv() const {
  std::set<std::string> value_keys;
  for (const Record& r : records)
    for (auto& [k, v] : r.values) value_keys.insert(k);
  std::ostringstream out;
  out << "source,graph6,n,pass,skipped";
  for (const std::string& k : value_keys) out << "," << k;
  out << "\n";
  for (const Record& r : records) {
    out << r.source << "," << r.graph6 << "," << r.n << "," << (r.pass ? 1 : 0) << ","
        << (r.skipped ? 1 : 0);
    for (const std::string& k : value_keys) {
      out << ",";
      auto it = r.values.find(k);
      if (it != r.values.end()) out << it->second;
    }
    out << "\n";
  }
  return out.str();
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "experiment: " << experiment << "\n";
  if (!params.empty()) out << "params: " << params.dump() << "\n";
  for (const Record& r : records) {
    if (r.pass && !r.skipped) continue;  // only surprises line by line
    out << (r.skipped ? "  SKIP " : "  FAIL ") << r.source << " " << r.graph6;
    for (auto& [k, v] : r.values) out << " " << k << "=" << v;
    out << "\n";
  }
  if (summary.contains("checks"))
    for (const json& c : summary["checks"])
      if (!c.value("pass", false))
        out << "  FAIL check: " << c.value("name", "?") << " " << c.value("detail", "") << "\n";
  out << "summary: " << summary.dump() << "\n";
  out << "runtime_ms: " << runtime_ms << "\n";
  return out.str();
}

}  // namespace isogame
