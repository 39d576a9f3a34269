#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace specht {

struct ReportRow {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string detail;  // populated on failure
};

/// Ordered list of check results, exportable as CSV or JSON.
class Report {
 public:
  void add(std::string check, std::string instance, bool pass, std::string detail = {});
  void append(const Report& other);

  const std::vector<ReportRow>& rows() const { return rows_; }
  bool all_pass() const;
  std::size_t failures() const;

  std::string to_csv() const;
  nlohmann::json to_json() const;
  /// One line per distinct check: name, rows, passed, failed.
  std::string summary_table() const;

 private:
  std::vector<ReportRow> rows_;
};

std::string csv_field(const std::string& s);

}  // namespace specht
