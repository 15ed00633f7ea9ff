#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "envyic/money.hpp"

namespace envyic::harness {

inline constexpr int kCsvDigits = 6;

/// Comma separated, '\n' line endings, amounts with six decimals.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  /// "# key=value" line ahead of the header; readers skip lines starting with '#'.
  void comment(const std::string& text);
  void header(const std::vector<std::string>& names);
  CsvWriter& cell(const Money& value);
  CsvWriter& cell(std::size_t value);
  CsvWriter& cell(const std::string& value);
  void end_row();

 private:
  void separator();
  std::ostream& out_;
  bool row_open_ = false;
};

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  /// Index of a named column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
};

/// Numeric CSV as written by CsvWriter. Throws std::runtime_error on a ragged
/// or non-numeric row.
CsvTable read_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace envyic::harness
