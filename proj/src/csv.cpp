#include "envyic/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace envyic::harness {

void CsvWriter::comment(const std::string& text) { out_ << "# " << text << '\n'; }

void CsvWriter::header(const std::vector<std::string>& names) {
  for (const auto& name : names) cell(name);
  end_row();
}

void CsvWriter::separator() {
  if (row_open_) out_ << ',';
  row_open_ = true;
}

CsvWriter& CsvWriter::cell(const Money& value) {
  separator();
  out_ << to_fixed(value, kCsvDigits);
  return *this;
}

CsvWriter& CsvWriter::cell(std::size_t value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::cell(const std::string& value) {
  separator();
  out_ << value;
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_open_ = false;
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] == name) return k;
  }
  throw std::out_of_range("no CSV column named " + name);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_fields(line);
    if (!have_header) {
      table.columns = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.columns.size()) {
      throw std::runtime_error("CSV line " + std::to_string(line_no) + ": expected " +
                               std::to_string(table.columns.size()) + " fields");
    }
    std::vector<double> row(fields.size());
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto& f = fields[k];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), row[k]);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw std::runtime_error("CSV line " + std::to_string(line_no) + ": not a number: '" + f + "'");
      }
    }
    table.rows.push_back(std::move(row));
  }
  if (!have_header) throw std::runtime_error("CSV has no header row");
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_csv(in);
}

}  // namespace envyic::harness
