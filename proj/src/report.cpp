#include "specht/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace specht {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void Report::add(std::string check, std::string instance, bool pass, std::string detail) {
  rows_.push_back({std::move(check), std::move(instance), pass, pass ? std::string{} : std::move(detail)});
}

void Report::append(const Report& other) { rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end()); }

bool Report::all_pass() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const ReportRow& r) { return r.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(rows_.begin(), rows_.end(), [](const ReportRow& r) { return !r.pass; }));
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "check,instance,pass,detail\n";
  for (const auto& r : rows_)
    os << csv_field(r.check) << ',' << csv_field(r.instance) << ',' << (r.pass ? "true" : "false") << ','
       << csv_field(r.detail) << '\n';
  return os.str();
}

nlohmann::json Report::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : rows_) {
    nlohmann::json row = {{"check", r.check}, {"instance", r.instance}, {"pass", r.pass}};
    if (!r.pass) row["detail"] = r.detail;
    arr.push_back(std::move(row));
  }
  return arr;
}

std::string Report::summary_table() const {
  // Keep first-appearance order of checks.
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& r : rows_) {
    auto [it, inserted] = counts.try_emplace(r.check, 0, 0);
    if (inserted) order.push_back(r.check);
    (r.pass ? it->second.first : it->second.second)++;
  }
  std::ostringstream os;
  for (const auto& c : order) {
    const auto [pass, fail] = counts[c];
    os << (fail == 0 ? "PASS " : "FAIL ") << c << "  (" << pass << " passed, " << fail << " failed)\n";
  }
  return os.str();
}

}  // namespace specht
