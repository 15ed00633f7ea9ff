#include "envyic/types.hpp"

#include <string>

#include "envyic/errors.hpp"

namespace envyic {
namespace {

const Money& zero() {
  static const Money z = 0;
  return z;
}

void check_non_negative(const std::vector<Money>& xs, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 0) throw InvalidInstance(std::string(what) + "[" + std::to_string(i) + "] is negative");
  }
}

}  // namespace

DiscountCurve::DiscountCurve(std::vector<Money> weights) : weights_(std::move(weights)) {
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    if (weights_[j] < 0) throw InvalidInstance("discount curve entry " + std::to_string(j) + " is negative");
    if (j > 0 && weights_[j] > weights_[j - 1]) {
      throw InvalidInstance("discount curve increases at slot " + std::to_string(j));
    }
  }
}

DiscountCurve DiscountCurve::geometric(const Money& ratio, std::size_t slots) {
  if (ratio <= 0 || ratio > 1) throw InvalidInstance("geometric ratio must lie in (0, 1]");
  std::vector<Money> w;
  w.reserve(slots);
  Money power = ratio;
  for (std::size_t j = 0; j < slots; ++j) {
    w.push_back(power);
    power *= ratio;
  }
  return DiscountCurve(std::move(w));
}

const Money& DiscountCurve::at(Slot slot) const {
  if (!slot.assigned()) return zero();
  if (slot.index() >= weights_.size()) {
    throw RangeError("slot " + std::to_string(slot.index()) + " outside curve of length " +
                     std::to_string(weights_.size()));
  }
  return weights_[slot.index()];
}

const Money& DiscountCurve::padded(std::size_t index) const {
  return index < weights_.size() ? weights_[index] : zero();
}

void PositionInstance::validate() const {
  if (bids.empty()) throw InvalidInstance("instance needs at least one bidder");
  if (values.size() != bids.size()) throw DimensionError("values and bids differ in length");
  check_non_negative(values, "values");
  check_non_negative(bids, "bids");
}

void AdTypesInstance::validate() const {
  if (bids.empty()) throw InvalidInstance("instance needs at least one bidder");
  if (values.size() != bids.size()) throw DimensionError("values and bids differ in length");
  if (curves.size() != bids.size()) throw DimensionError("need one discount curve per bidder");
  const std::size_t m = curves.front().size();
  if (m == 0) throw InvalidInstance("instance needs at least one slot");
  for (const auto& c : curves) {
    if (c.size() != m) throw DimensionError("all discount curves must have the same length");
  }
  if (quantum <= 0) throw InvalidInstance("quantum must be positive");
  check_non_negative(values, "values");
  check_non_negative(bids, "bids");
}

AdTypesInstance AdTypesInstance::with_bid(std::size_t bidder, const Money& bid) const {
  if (bidder >= bids.size()) throw RangeError("bidder index out of range");
  AdTypesInstance out = *this;
  out.bids[bidder] = bid;
  return out;
}

AdTypesInstance AdTypesInstance::with_bids(std::vector<Money> new_bids) const {
  if (new_bids.size() != bids.size()) throw DimensionError("bid vector has the wrong length");
  AdTypesInstance out = *this;
  out.bids = std::move(new_bids);
  return out;
}

AdTypesInstance AdTypesInstance::truthful() const { return with_bids(values); }

AdTypesInstance to_ad_types(const PositionInstance& instance, const Money& quantum) {
  instance.validate();
  AdTypesInstance out;
  out.values = instance.values;
  out.bids = instance.bids;
  out.curves.assign(instance.num_bidders(), instance.curve);
  out.quantum = quantum;
  return out;
}

std::vector<std::optional<std::size_t>> Outcome::occupants(std::size_t num_slots) const {
  std::vector<std::optional<std::size_t>> out(num_slots);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i].assigned() && assignment[i].index() < num_slots) out[assignment[i].index()] = i;
  }
  return out;
}

void Outcome::validate() const {
  if (assignment.size() != payments.size()) throw DimensionError("assignment and payments differ in length");
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    for (std::size_t k = i + 1; k < assignment.size(); ++k) {
      if (assignment[i].assigned() && assignment[i] == assignment[k]) {
        throw InvalidInstance("slot " + std::to_string(assignment[i].index()) + " assigned twice");
      }
    }
  }
}

Money discounted_value(const Money& value, const DiscountCurve& curve, Slot slot) {
  return value * curve.at(slot);
}

Money utility(const Money& value, const DiscountCurve& curve, Slot slot, const Money& price) {
  return discounted_value(value, curve, slot) - price;
}

}  // namespace envyic
