#include "envyic/dataset.hpp"

#include "envyic/csv.hpp"
#include "envyic/metrics.hpp"

namespace envyic::harness {

std::vector<DatasetRow> dataset_rows(std::size_t auction_id, const AdTypesInstance& instance, const Mechanism& mech) {
  const Outcome outcome = mech.run(instance);
  const std::size_t m = instance.num_slots();
  const auto occupants = outcome.occupants(m);

  std::vector<Money> slot_price(m, Money(0));
  for (std::size_t j = 0; j < m; ++j) {
    if (occupants[j]) slot_price[j] = outcome.payments[*occupants[j]];
  }

  std::vector<DatasetRow> rows;
  rows.reserve(instance.num_bidders());
  for (std::size_t i = 0; i < instance.num_bidders(); ++i) {
    const auto& curve = instance.curves[i];
    const Money own = utility(instance.values[i], curve, outcome.assignment[i], outcome.payments[i]);
    DatasetRow row;
    row.auction_id = auction_id;
    row.bidder_id = i;
    for (std::size_t j = 0; j < m; ++j) {
      Money value = discounted_value(instance.values[i], curve, Slot(j));
      if (outcome.assignment[i] == Slot(j)) {
        row.envy.emplace_back(0);
      } else {
        row.envy.push_back(value - slot_price[j] - own);
      }
      row.value.push_back(std::move(value));
      row.price.push_back(slot_price[j]);
    }
    row.label_regret = metrics::ic_regret(i, instance, mech).value;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DatasetRow> build_dataset(const GeneratorConfig& cfg, std::size_t count, adtypes::GreedyRule rule,
                                      Execution execution) {
  const GreedyMechanism mech(rule);
  auto per_auction = indexed_map(count, execution, [&](std::size_t k) {
    AdTypesInstance instance = generate_instance(cfg, k);
    return dataset_rows(k, instance, mech);
  });
  std::vector<DatasetRow> rows;
  for (auto& chunk : per_auction) {
    for (auto& row : chunk) rows.push_back(std::move(row));
  }
  return rows;
}

void write_dataset_csv(std::ostream& out, const std::vector<DatasetRow>& rows, const GeneratorConfig& cfg) {
  CsvWriter csv(out);
  csv.comment("rng=" + std::string(kRngAlgorithm) + " seed=" + std::to_string(cfg.seed));
  std::vector<std::string> columns{"auction_id", "bidder_id"};
  for (const char* prefix : {"envy_", "value_", "price_"}) {
    for (std::size_t j = 1; j <= cfg.n_slots; ++j) columns.push_back(prefix + std::to_string(j));
  }
  columns.emplace_back("label_regret");
  csv.header(columns);
  for (const auto& row : rows) {
    csv.cell(row.auction_id).cell(row.bidder_id);
    for (const auto& x : row.envy) csv.cell(x);
    for (const auto& x : row.value) csv.cell(x);
    for (const auto& x : row.price) csv.cell(x);
    csv.cell(row.label_regret);
    csv.end_row();
  }
}

}  // namespace envyic::harness
