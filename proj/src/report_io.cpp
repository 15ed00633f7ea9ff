#include "envyic/report_io.hpp"

#include "envyic/csv.hpp"
#include "envyic/instance_json.hpp"

namespace envyic {

namespace {

nlohmann::json slot_json(Slot slot) {
  if (!slot.assigned()) return nullptr;
  return slot.index();
}

nlohmann::json money_array(std::span<const Money> values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(money_to_json(v));
  return out;
}

}  // namespace

nlohmann::json to_json(const Outcome& outcome) {
  nlohmann::json out;
  auto slots = nlohmann::json::array();
  for (auto s : outcome.assignment) slots.push_back(slot_json(s));
  out["assignment"] = slots;
  out["payments"] = money_array(outcome.payments);
  return out;
}

nlohmann::json to_json(const metrics::DiagnosticsReport& report) {
  nlohmann::json out;
  out["mechanism"] = report.mechanism;
  auto bidders = nlohmann::json::array();
  for (std::size_t i = 0; i < report.bidders.size(); ++i) {
    const auto& b = report.bidders[i];
    nlohmann::json row;
    row["bidder"] = i;
    row["ic_envy"] = money_to_json(b.ic_envy);
    row["ic_regret"] = money_to_json(b.ic_regret);
    row["best_deviation"] = money_to_json(b.best_deviation);
    row["envy_argmax"] = b.envy_argmax ? nlohmann::json(*b.envy_argmax) : nlohmann::json(nullptr);
    row["bid_utility"] = money_to_json(b.bid_utility);
    row["truthful_utility"] = money_to_json(b.truthful_utility);
    row["regret_at_bid"] = money_to_json(b.regret_at_bid);
    row["regret_monotone_applicable"] = b.regret_monotone_applicable;
    row["regret_monotone_holds"] = b.regret_monotone_holds;
    row["semi_smooth_lhs"] = money_to_json(b.semi_smooth_lhs);
    row["semi_smooth_rhs"] = money_to_json(b.semi_smooth_rhs);
    row["semi_smooth_holds"] = b.semi_smooth_holds;
    bidders.push_back(row);
  }
  out["bidders"] = bidders;
  out["sw"] = money_to_json(report.sw);
  out["sw_opt"] = money_to_json(report.sw_opt);
  out["swl"] = money_to_json(report.swl);
  out["sw_reported"] = money_to_json(report.sw_reported);
  out["total_envy"] = money_to_json(report.total_envy);
  out["envy_dominates_regret"] = report.envy_dominates_regret;
  out["swl_bound_applicable"] = report.swl_bound_applicable;
  out["swl_bound_holds"] = report.swl_bound_holds;
  out["swl_bound"] = metrics::to_string(report.swl_bound);
  out["regret_monotone_ok"] = report.regret_monotone_ok;
  out["semi_smooth_ok"] = report.semi_smooth_ok;
  return out;
}

nlohmann::json to_json(const assignment::DualCertificate& cert) {
  nlohmann::json out;
  out["matching"] = cert.matching;
  out["p"] = money_array(cert.slot_prices);
  out["q"] = money_array(cert.bidder_utilities);
  auto edges = nlohmann::json::array();
  for (const auto& [i, j] : cert.tight_edges) edges.push_back({i, j});
  out["tight_edges"] = edges;
  return out;
}

}  // namespace envyic

namespace envyic::harness {

const std::vector<std::string>& report_csv_columns() {
  static const std::vector<std::string> columns{"auction_id", "bidder", "ic_envy", "ic_regret",
                                                "best_deviation", "sw", "sw_opt", "swl"};
  return columns;
}

void write_report_rows(CsvWriter& csv, std::size_t auction_id, const metrics::DiagnosticsReport& report) {
  for (std::size_t i = 0; i < report.bidders.size(); ++i) {
    const auto& b = report.bidders[i];
    csv.cell(auction_id).cell(i).cell(b.ic_envy).cell(b.ic_regret).cell(b.best_deviation);
    csv.cell(report.sw).cell(report.sw_opt).cell(report.swl);
    csv.end_row();
  }
}

}  // namespace envyic::harness
