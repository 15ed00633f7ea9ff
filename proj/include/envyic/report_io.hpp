#pragma once

#include <json.hpp>

#include "envyic/assignment.hpp"
#include "envyic/metrics.hpp"
#include "envyic/types.hpp"

namespace envyic {

nlohmann::json to_json(const Outcome& outcome);
nlohmann::json to_json(const metrics::DiagnosticsReport& report);
/// Matching, p, q and tight edges; amounts as decimal strings.
nlohmann::json to_json(const assignment::DualCertificate& cert);

}  // namespace envyic

namespace envyic::harness {

class CsvWriter;

/// Columns of the per-bidder report CSV.
const std::vector<std::string>& report_csv_columns();
void write_report_rows(CsvWriter& csv, std::size_t auction_id, const metrics::DiagnosticsReport& report);

}  // namespace envyic::harness
