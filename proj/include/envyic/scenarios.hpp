#pragma once

#include <utility>
#include <vector>

#include "envyic/mechanism.hpp"
#include "envyic/metrics.hpp"

namespace envyic::harness {

/// Single-item second-price auction with personal reserves. A bidder is
/// eligible when b_i >= r_i; the highest eligible bid wins (ties to the lower
/// index) and pays max(r_winner, highest competing eligible bid). Truthful
/// bidding is dominant. No eligible bidder leaves the item unallocated.
class ReserveMechanism final : public Mechanism {
 public:
  explicit ReserveMechanism(std::vector<Money> reserves) : reserves_(std::move(reserves)) {}
  std::string name() const override { return "second-price-reserve"; }
  Outcome run(const AdTypesInstance& instance) const override;
  DeviationRule deviation_rule() const override { return DeviationRule::Rank; }
  std::vector<Money> bid_thresholds(const AdTypesInstance&, std::size_t bidder) const override {
    return {reserves_.at(bidder)};
  }
  const std::vector<Money>& reserves() const { return reserves_; }

 private:
  std::vector<Money> reserves_;
};

/// Runs the reserve auction on one item and computes the diagnostics.
/// DimensionError if the three vectors differ in length.
std::pair<Outcome, metrics::DiagnosticsReport> reserve_auction_scenario(const std::vector<Money>& values,
                                                                        const std::vector<Money>& bids,
                                                                        const std::vector<Money>& reserves);

}  // namespace envyic::harness
