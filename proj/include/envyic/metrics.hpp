#pragma once

#include <optional>
#include <string>
#include <vector>

#include "envyic/mechanism.hpp"
#include "envyic/types.hpp"

namespace envyic::metrics {

/// e_i^j: how much bidder i prefers j's slot at j's realised price over its own,
/// clamped at 0. Uses i's curve on j's slot.
Money pairwise_envy(std::size_t i, std::size_t j, const AdTypesInstance& instance, const Outcome& outcome);

/// Same difference without the clamp (negative when i prefers its own bundle).
Money envy_difference(std::size_t i, std::size_t j, const AdTypesInstance& instance, const Outcome& outcome);

struct EnvyResult {
  Money value;                         // >= 0
  std::optional<std::size_t> against;  // bidder attaining the max, if positive
};

/// Max pairwise envy of i. `truthful_outcome` must come from the mechanism run
/// with b_i = v_i.
EnvyResult ic_envy_detail(std::size_t i, const AdTypesInstance& instance, const Outcome& truthful_outcome);
Money ic_envy(std::size_t i, const AdTypesInstance& instance, const Outcome& truthful_outcome);

/// Utility (at the true value) of bidder i when it bids `bid` against b_{-i}.
Money utility_at_bid(std::size_t i, const Money& bid, const AdTypesInstance& instance, const Mechanism& mech);

/// max{0, u_i(deviation) - u_i(truthful)} holding b_{-i} fixed.
Money regret_against_bid(std::size_t i, const Money& deviation, const AdTypesInstance& instance,
                         const Mechanism& mech);

/// Finite deviation set on the money grid covering every allocation region of
/// bidder i (see DeviationRule). Sorted, unique, non-negative.
std::vector<Money> deviation_candidates(std::size_t i, const AdTypesInstance& instance, const Mechanism& mech);

struct RegretResult {
  Money value;          // >= 0
  Money best_deviation; // v_i when no deviation helps
};

/// Best gain over the deviation candidates relative to bidding `reference`
/// (the true value for IC-Regret). Under rank allocation a bid exactly equal to
/// a rival's is skipped: the index tie-break there is an artefact, and the
/// regions on both sides are covered by c - q and c + q.
RegretResult max_regret(std::size_t i, const Money& reference, const AdTypesInstance& instance,
                        const Mechanism& mech);
RegretResult ic_regret(std::size_t i, const AdTypesInstance& instance, const Mechanism& mech);

struct Welfare {
  Money sw;      // realised welfare at true values
  Money sw_opt;  // max-weight matching on true values
  Money swl;     // sw_opt - sw
};

Welfare social_welfare(const AdTypesInstance& instance, const Outcome& outcome);

/// Welfare of the outcome measured with the reported bids.
Money reported_welfare(const AdTypesInstance& instance, const Outcome& outcome);

enum class BoundStatus { Holds, Fails, NotApplicable };
std::string to_string(BoundStatus status);

struct BidderDiagnostics {
  Money ic_envy;
  Money ic_regret;
  Money best_deviation;
  std::optional<std::size_t> envy_argmax;
  Money bid_utility;       // u_i(b_i, b_-i)
  Money truthful_utility;  // u_i(v_i, b_-i)
  Money regret_at_bid;     // R_i(b_i, b_-i)
  bool regret_monotone_applicable = false;  // u_i(b) >= u_i(v)
  bool regret_monotone_holds = true;        // R_i(b_i) <= R_i(v_i) when applicable
  Money semi_smooth_lhs;   // u_i(v_i/2, b_-i) + alpha_{pi(b,j),j} v_{pi(b,j)}
  Money semi_smooth_rhs;   // alpha_{i,X(v,i)} v_i / 2
  bool semi_smooth_holds = true;
};

struct DiagnosticsReport {
  std::string mechanism;
  std::vector<BidderDiagnostics> bidders;
  Money sw, sw_opt, swl;   // allocation under the bids, valued at true values
  Money sw_reported;       // allocation under the bids, valued at the bids
  Money total_envy;
  bool envy_dominates_regret = true;
  bool swl_bound_applicable = false;
  bool swl_bound_holds = true;  // vacuously true when not applicable
  BoundStatus swl_bound = BoundStatus::NotApplicable;
  bool regret_monotone_ok = true;
  bool semi_smooth_ok = true;
};

/// Fills every diagnostic for a (possibly untruthful) bid profile.
///
/// The welfare-loss bound is applicable when SW^OPT(v) >= 8 * SW(b) and every
/// bidder weakly prefers its bid to the truth; it then asserts
/// sum_i IC-Envy_i >= SWL(b) / 4. SW(b) and SWL(b) here price the allocation
/// at the reported bids.
DiagnosticsReport verify_theorems(const AdTypesInstance& instance, const Mechanism& mech);

}  // namespace envyic::metrics
