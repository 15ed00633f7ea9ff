#include "envyic/scenarios.hpp"

#include "envyic/errors.hpp"

namespace envyic::harness {

Outcome ReserveMechanism::run(const AdTypesInstance& instance) const {
  const std::size_t n = instance.num_bidders();
  if (reserves_.size() != n) throw DimensionError("one reserve per bidder");
  Outcome out;
  out.assignment.assign(n, Slot::unassigned());
  out.payments.assign(n, Money(0));

  std::optional<std::size_t> winner;
  for (std::size_t i = 0; i < n; ++i) {
    if (instance.bids[i] < reserves_[i]) continue;
    if (!winner || instance.bids[i] > instance.bids[*winner]) winner = i;
  }
  if (!winner || instance.num_slots() == 0) return out;

  Money price = reserves_[*winner];
  for (std::size_t i = 0; i < n; ++i) {
    if (i != *winner && instance.bids[i] >= reserves_[i] && instance.bids[i] > price) price = instance.bids[i];
  }
  out.assignment[*winner] = Slot(0);
  out.payments[*winner] = price;
  return out;
}

std::pair<Outcome, metrics::DiagnosticsReport> reserve_auction_scenario(const std::vector<Money>& values,
                                                                        const std::vector<Money>& bids,
                                                                        const std::vector<Money>& reserves) {
  if (values.size() != bids.size() || values.size() != reserves.size()) {
    throw DimensionError("values, bids and reserves must have one entry per bidder");
  }
  AdTypesInstance instance;
  instance.values = values;
  instance.bids = bids;
  instance.curves.assign(values.size(), DiscountCurve({Money(1)}));
  instance.validate();
  const ReserveMechanism mech(reserves);
  return {mech.run(instance), metrics::verify_theorems(instance, mech)};
}

}  // namespace envyic::harness
