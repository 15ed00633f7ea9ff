#pragma once

#include <ostream>
#include <vector>

#include "envyic/adtypes_pricing.hpp"
#include "envyic/generator.hpp"
#include "envyic/mechanism.hpp"
#include "envyic/parallel.hpp"

namespace envyic::harness {

/// Features of one bidder in one auction. Slot vectors have one entry per slot.
struct DatasetRow {
  std::size_t auction_id = 0;
  std::size_t bidder_id = 0;
  std::vector<Money> envy;   // u_i(slot j at price_j) - u_i(own), unclamped
  std::vector<Money> value;  // v_i * alpha_{i,j}
  std::vector<Money> price;  // payment of slot j's occupant, 0 if empty
  Money label_regret;
};

/// Rows for every bidder of one (truthful) auction under `mech`.
std::vector<DatasetRow> dataset_rows(std::size_t auction_id, const AdTypesInstance& instance, const Mechanism& mech);

std::vector<DatasetRow> build_dataset(const GeneratorConfig& cfg, std::size_t count, adtypes::GreedyRule rule,
                                      Execution execution = Execution::Parallel);

/// Header (with an rng comment line) and one line per row.
void write_dataset_csv(std::ostream& out, const std::vector<DatasetRow>& rows, const GeneratorConfig& cfg);

}  // namespace envyic::harness
