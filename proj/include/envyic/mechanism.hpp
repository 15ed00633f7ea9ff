#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "envyic/adtypes_pricing.hpp"
#include "envyic/position_auction.hpp"
#include "envyic/types.hpp"

namespace envyic {

/// Where a bidder's allocation can change as its own bid moves, which decides
/// the finite set of counterfactual bids the regret oracle has to try.
enum class DeviationRule {
  Rank,                 // rank-by-bid: competitor bids
  MatchingBreakpoints,  // MWPM: rival edge values and matching-switch points
  SlotBreakpoints,      // greedy: rival discounted bids at the same slot
};

/// A deterministic, re-entrant auction: the bids (and curves) of an instance
/// in, an outcome out. Values in the instance are never read.
class Mechanism {
 public:
  virtual ~Mechanism() = default;

  virtual std::string name() const = 0;
  virtual Outcome run(const AdTypesInstance& instance) const = 0;
  virtual DeviationRule deviation_rule() const = 0;
  /// Extra bid levels where this bidder's treatment changes (e.g. a reserve).
  virtual std::vector<Money> bid_thresholds(const AdTypesInstance&, std::size_t) const { return {}; }
};

class RegularMechanism final : public Mechanism {
 public:
  explicit RegularMechanism(position::MechanismKind kind) : kind_(std::move(kind)) {}
  std::string name() const override { return std::string(position::tag(kind_.rule)); }
  Outcome run(const AdTypesInstance& instance) const override;
  DeviationRule deviation_rule() const override { return DeviationRule::Rank; }
  const position::MechanismKind& kind() const { return kind_; }

 private:
  position::MechanismKind kind_;
};

class ExtendedGspMechanism final : public Mechanism {
 public:
  std::string name() const override { return "extended-gsp"; }
  Outcome run(const AdTypesInstance& instance) const override;
  DeviationRule deviation_rule() const override { return DeviationRule::MatchingBreakpoints; }
};

class MatchingVcgMechanism final : public Mechanism {
 public:
  std::string name() const override { return "vcg"; }
  Outcome run(const AdTypesInstance& instance) const override;
  DeviationRule deviation_rule() const override { return DeviationRule::MatchingBreakpoints; }
};

class GreedyMechanism final : public Mechanism {
 public:
  explicit GreedyMechanism(adtypes::GreedyRule rule) : rule_(rule) {}
  std::string name() const override;
  Outcome run(const AdTypesInstance& instance) const override;
  DeviationRule deviation_rule() const override { return DeviationRule::SlotBreakpoints; }

 private:
  adtypes::GreedyRule rule_;
};

/// Tags: vcg | gsp | gfp | extended-gsp | greedy-gsp | greedy-externality.
/// "vcg" resolves to the rank-based rule when every bidder shares one curve and
/// to minimal-dual matching VCG otherwise; gsp/gfp require a common curve.
std::unique_ptr<Mechanism> make_mechanism(std::string_view tag, const AdTypesInstance& instance);

/// Tags usable without looking at an instance (vcg maps to matching VCG).
std::unique_ptr<Mechanism> make_mechanism(std::string_view tag);

}  // namespace envyic
