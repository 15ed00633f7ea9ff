#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "envyic/assignment.hpp"
#include "envyic/types.hpp"

namespace envyic::adtypes {

/// Non-anonymous extended GSP prices gsp_{i,j} = max{p_j, t_{i,j}}, rounded
/// back to the unperturbed grid.
struct ExtendedGspPrices {
  std::vector<Money> charged;             // bidder -> price at the matched slot
  std::vector<std::vector<Money>> grid;   // bidder -> slot -> price (balanced slots)
};

/// Largest weight of an edge in `tight_j` strictly below w_{bidder,slot}; 0 if none.
Money threshold_t(std::size_t bidder, std::size_t slot, std::span<const assignment::Edge> tight_j,
                  const assignment::WeightMatrix& weights);

struct ExtendedGspResult {
  Outcome outcome;
  ExtendedGspPrices prices;
  assignment::DualCertificate certificate;  // on the balanced, perturbed graph
};

ExtendedGspResult extended_gsp_outcome(const AdTypesInstance& instance);

/// MWPM allocation priced at the minimal (VCG clearing) slot prices.
Outcome vcg_outcome(const AdTypesInstance& instance);

enum class GreedyRule { Gsp, Externality };

/// Slots from best to worst each go to the unassigned bidder with the highest
/// discounted bid (ties to the lower index). GSP charges the runner-up's
/// discounted bid at that step; Externality charges the welfare the other
/// bidders lose because the bidder is present. Unassigned bidders pay 0.
/// Externality pricing reruns greedy once per bidder: O(n^2 m).
Outcome greedy_outcome(const AdTypesInstance& instance, GreedyRule rule);

bool check_price_monotonicity(const ExtendedGspPrices& prices);

}  // namespace envyic::adtypes
