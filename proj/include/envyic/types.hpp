#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "envyic/money.hpp"

namespace envyic {

/// A slot position, or the explicit "no slot" sentinel. Unassigned behaves as a
/// slot with zero value and zero price.
class Slot {
 public:
  constexpr Slot() : index_(kNone) {}  // unassigned
  static constexpr Slot unassigned() { return Slot(); }
  constexpr explicit Slot(std::size_t index) : index_(index) {}

  constexpr bool assigned() const { return index_ != kNone; }
  constexpr std::size_t index() const { return index_; }

  friend constexpr auto operator<=>(Slot, Slot) = default;

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t index_;
};

/// Non-increasing, non-negative slot qualities alpha_1 >= ... >= alpha_m.
class DiscountCurve {
 public:
  DiscountCurve() = default;
  /// Throws InvalidInstance if a weight is negative or the sequence increases.
  explicit DiscountCurve(std::vector<Money> weights);

  /// Geometric curve (ratio, ratio^2, ..., ratio^m).
  static DiscountCurve geometric(const Money& ratio, std::size_t slots);

  std::size_t size() const { return weights_.size(); }
  const std::vector<Money>& weights() const { return weights_; }

  /// alpha for the slot; 0 for the unassigned sentinel. RangeError past the end.
  const Money& at(Slot slot) const;
  /// alpha_k with zero padding beyond the curve (rank-indexed mechanisms).
  const Money& padded(std::size_t index) const;

  friend bool operator==(const DiscountCurve&, const DiscountCurve&) = default;

 private:
  std::vector<Money> weights_;
};

/// Single common curve; n bidders with private values and reported bids.
struct PositionInstance {
  std::vector<Money> values;
  std::vector<Money> bids;
  DiscountCurve curve;

  std::size_t num_bidders() const { return bids.size(); }
  void validate() const;
};

/// Per-bidder curves (bidders of one ad type share a curve).
struct AdTypesInstance {
  std::vector<Money> values;
  std::vector<Money> bids;
  std::vector<DiscountCurve> curves;
  Money quantum{1, 100};

  std::size_t num_bidders() const { return bids.size(); }
  std::size_t num_slots() const { return curves.empty() ? 0 : curves.front().size(); }
  void validate() const;

  /// Same environment with bidder i's bid replaced.
  AdTypesInstance with_bid(std::size_t bidder, const Money& bid) const;
  /// Same environment with every bid replaced.
  AdTypesInstance with_bids(std::vector<Money> new_bids) const;
  /// Truthful profile: bids = values.
  AdTypesInstance truthful() const;
};

/// Lifts a position instance into the Ad Types environment (every bidder gets
/// the common curve).
AdTypesInstance to_ad_types(const PositionInstance& instance, const Money& quantum);

struct Outcome {
  std::vector<Slot> assignment;
  std::vector<Money> payments;

  std::size_t num_bidders() const { return assignment.size(); }
  /// Inverse map slot -> bidder; entries without an occupant are empty.
  std::vector<std::optional<std::size_t>> occupants(std::size_t num_slots) const;
  /// Throws InvalidInstance if two bidders share a slot or sizes differ.
  void validate() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// v * alpha_slot. RangeError if the slot lies past the curve.
Money discounted_value(const Money& value, const DiscountCurve& curve, Slot slot);

/// v * alpha_slot - price.
Money utility(const Money& value, const DiscountCurve& curve, Slot slot, const Money& price);

}  // namespace envyic
