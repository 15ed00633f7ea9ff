#include "envyic/metrics.hpp"

#include <algorithm>

#include "envyic/assignment.hpp"
#include "envyic/errors.hpp"

namespace envyic::metrics {
namespace {

void check_bidder(std::size_t i, const AdTypesInstance& instance) {
  if (i >= instance.num_bidders()) throw RangeError("bidder " + std::to_string(i) + " out of range");
}

Money own_utility(std::size_t i, const AdTypesInstance& instance, const Outcome& outcome) {
  return utility(instance.values[i], instance.curves[i], outcome.assignment[i], outcome.payments[i]);
}

// Grid points bracketing x: x itself when it lies on the grid, plus the
// nearest grid points strictly below and above.
void add_around(std::vector<Money>& out, const Money& x, const Money& q) {
  Money lo = floor_to_multiple(x, q);
  Money hi = ceil_to_multiple(x, q);
  if (lo == hi) {
    out.push_back(lo - q);
    out.push_back(lo);
    out.push_back(lo + q);
  } else {
    out.push_back(lo);
    out.push_back(hi);
  }
}

void add_rank_candidates(std::vector<Money>& out, std::size_t i, const AdTypesInstance& instance) {
  const Money& q = instance.quantum;
  out.push_back(0);
  bool any = false;
  Money top = 0;
  for (std::size_t k = 0; k < instance.num_bidders(); ++k) {
    if (k == i) continue;
    add_around(out, instance.bids[k], q);
    if (!any || instance.bids[k] > top) top = instance.bids[k];
    any = true;
  }
  out.push_back(any ? Money(ceil_to_multiple(top, q) + q) : q);
}

void add_rival_edge_candidates(std::vector<Money>& out, std::size_t i, const AdTypesInstance& instance,
                               bool same_slot_only) {
  const std::size_t m = instance.num_slots();
  const auto& own = instance.curves[i].weights();
  for (std::size_t k = 0; k < instance.num_bidders(); ++k) {
    if (k == i) continue;
    const auto& alpha = instance.curves[k].weights();
    for (std::size_t jr = 0; jr < m; ++jr) {
      const Money w = instance.bids[k] * alpha[jr];
      for (std::size_t j = 0; j < m; ++j) {
        if (same_slot_only && j != jr) continue;
        if (own[j] > 0) add_around(out, w / own[j], instance.quantum);
      }
    }
  }
}

// Bids at which bidder i's matched slot switches from j to k: the value of the
// best matching with i on slot j is b * alpha_{i,j} + C_j, where C_j is the
// optimum of the other bidders without slot j.
void add_matching_switch_candidates(std::vector<Money>& out, std::size_t i, const AdTypesInstance& instance) {
  const AdTypesInstance balanced = assignment::balance(instance);
  const auto w = assignment::weights_of(balanced);
  const std::size_t n = w.rows();
  if (n < 2) return;
  std::vector<Money> best_without(n);
  const auto others = w.minor(i, assignment::npos);
  for (std::size_t j = 0; j < n; ++j) best_without[j] = assignment::max_matching_value(others.minor(assignment::npos, j));
  const auto& alpha = balanced.curves[i].weights();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      if (alpha[j] == alpha[k]) continue;
      Money x = (best_without[k] - best_without[j]) / (alpha[j] - alpha[k]);
      if (x >= 0) add_around(out, x, instance.quantum);
    }
  }
}

}  // namespace

Money envy_difference(std::size_t i, std::size_t j, const AdTypesInstance& instance, const Outcome& outcome) {
  check_bidder(i, instance);
  check_bidder(j, instance);
  if (i == j) return 0;
  const Money theirs = utility(instance.values[i], instance.curves[i], outcome.assignment[j], outcome.payments[j]);
  return theirs - own_utility(i, instance, outcome);
}

Money pairwise_envy(std::size_t i, std::size_t j, const AdTypesInstance& instance, const Outcome& outcome) {
  Money d = envy_difference(i, j, instance, outcome);
  return d > 0 ? d : Money(0);
}

EnvyResult ic_envy_detail(std::size_t i, const AdTypesInstance& instance, const Outcome& truthful_outcome) {
  check_bidder(i, instance);
  EnvyResult result{Money(0), std::nullopt};
  for (std::size_t j = 0; j < instance.num_bidders(); ++j) {
    if (j == i) continue;
    Money e = pairwise_envy(i, j, instance, truthful_outcome);
    if (e > result.value) {
      result.value = e;
      result.against = j;
    }
  }
  return result;
}

Money ic_envy(std::size_t i, const AdTypesInstance& instance, const Outcome& truthful_outcome) {
  return ic_envy_detail(i, instance, truthful_outcome).value;
}

Money utility_at_bid(std::size_t i, const Money& bid, const AdTypesInstance& instance, const Mechanism& mech) {
  check_bidder(i, instance);
  const Outcome outcome = mech.run(instance.with_bid(i, bid));
  return own_utility(i, instance, outcome);
}

Money regret_against_bid(std::size_t i, const Money& deviation, const AdTypesInstance& instance,
                         const Mechanism& mech) {
  Money gain = utility_at_bid(i, deviation, instance, mech) - utility_at_bid(i, instance.values[i], instance, mech);
  return gain > 0 ? gain : Money(0);
}

std::vector<Money> deviation_candidates(std::size_t i, const AdTypesInstance& instance, const Mechanism& mech) {
  check_bidder(i, instance);
  std::vector<Money> out;
  add_rank_candidates(out, i, instance);
  switch (mech.deviation_rule()) {
    case DeviationRule::Rank:
      break;
    case DeviationRule::MatchingBreakpoints:
      add_rival_edge_candidates(out, i, instance, false);
      add_matching_switch_candidates(out, i, instance);
      break;
    case DeviationRule::SlotBreakpoints:
      add_rival_edge_candidates(out, i, instance, true);
      break;
  }
  for (const Money& t : mech.bid_thresholds(instance, i)) add_around(out, t, instance.quantum);

  std::erase_if(out, [](const Money& b) { return b < 0; });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RegretResult max_regret(std::size_t i, const Money& reference, const AdTypesInstance& instance,
                        const Mechanism& mech) {
  const Money baseline = utility_at_bid(i, reference, instance, mech);
  RegretResult best{Money(0), reference};
  const bool skip_ties = mech.deviation_rule() == DeviationRule::Rank;
  for (const Money& b : deviation_candidates(i, instance, mech)) {
    if (skip_ties) {
      bool ties = false;
      for (std::size_t k = 0; k < instance.num_bidders() && !ties; ++k) ties = k != i && instance.bids[k] == b;
      if (ties) continue;
    }
    Money gain = utility_at_bid(i, b, instance, mech) - baseline;
    if (gain > best.value) {
      best.value = gain;
      best.best_deviation = b;
    }
  }
  return best;
}

RegretResult ic_regret(std::size_t i, const AdTypesInstance& instance, const Mechanism& mech) {
  check_bidder(i, instance);
  return max_regret(i, instance.values[i], instance, mech);
}

Money reported_welfare(const AdTypesInstance& instance, const Outcome& outcome) {
  Money total = 0;
  for (std::size_t i = 0; i < instance.num_bidders(); ++i) {
    total += discounted_value(instance.bids[i], instance.curves[i], outcome.assignment[i]);
  }
  return total;
}

Welfare social_welfare(const AdTypesInstance& instance, const Outcome& outcome) {
  instance.validate();
  Welfare w;
  w.sw = 0;
  for (std::size_t i = 0; i < instance.num_bidders(); ++i) {
    w.sw += discounted_value(instance.values[i], instance.curves[i], outcome.assignment[i]);
  }
  w.sw_opt = assignment::max_matching_value(assignment::weights_of(instance.truthful()));
  w.swl = w.sw_opt - w.sw;
  return w;
}

std::string to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::Holds: return "holds";
    case BoundStatus::Fails: return "fails";
    case BoundStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

DiagnosticsReport verify_theorems(const AdTypesInstance& instance, const Mechanism& mech) {
  instance.validate();
  const std::size_t n = instance.num_bidders();
  DiagnosticsReport report;
  report.mechanism = mech.name();
  report.bidders.resize(n);

  const Outcome at_bids = mech.run(instance);
  const Outcome at_values = mech.run(instance.truthful());
  const Welfare welfare = social_welfare(instance, at_bids);
  report.sw = welfare.sw;
  report.sw_opt = welfare.sw_opt;
  report.swl = welfare.swl;
  report.sw_reported = reported_welfare(instance, at_bids);
  report.total_envy = 0;

  bool everyone_prefers_bid = true;
  for (std::size_t i = 0; i < n; ++i) {
    auto& d = report.bidders[i];
    const AdTypesInstance truthful_i = instance.with_bid(i, instance.values[i]);
    const Outcome truthful_outcome = mech.run(truthful_i);
    const EnvyResult envy = ic_envy_detail(i, instance, truthful_outcome);
    d.ic_envy = envy.value;
    d.envy_argmax = envy.against;
    const RegretResult regret = ic_regret(i, instance, mech);
    d.ic_regret = regret.value;
    d.best_deviation = regret.best_deviation;
    report.total_envy += d.ic_envy;
    if (d.ic_envy < d.ic_regret) report.envy_dominates_regret = false;

    d.bid_utility = own_utility(i, instance, at_bids);
    d.truthful_utility = own_utility(i, instance, truthful_outcome);
    d.regret_at_bid = max_regret(i, instance.bids[i], instance, mech).value;
    d.regret_monotone_applicable = d.bid_utility >= d.truthful_utility;
    d.regret_monotone_holds = !d.regret_monotone_applicable || d.regret_at_bid <= d.ic_regret;
    if (!d.regret_monotone_holds) report.regret_monotone_ok = false;
    if (!d.regret_monotone_applicable) everyone_prefers_bid = false;

    // Half-value deviation against the slot i would hold under truthful bids.
    const Slot target = at_values.assignment[i];
    Money occupant_value = 0;
    if (target.assigned()) {
      for (std::size_t k = 0; k < n; ++k) {
        if (at_bids.assignment[k] == target) {
          occupant_value = discounted_value(instance.values[k], instance.curves[k], target);
        }
      }
    }
    d.semi_smooth_lhs = utility_at_bid(i, Money(instance.values[i] / 2), instance, mech) + occupant_value;
    d.semi_smooth_rhs = discounted_value(instance.values[i], instance.curves[i], target) / 2;
    d.semi_smooth_holds = d.semi_smooth_lhs >= d.semi_smooth_rhs;
    if (!d.semi_smooth_holds) report.semi_smooth_ok = false;
  }

  report.swl_bound_applicable = everyone_prefers_bid && report.sw_opt >= 8 * report.sw_reported;
  if (report.swl_bound_applicable) {
    const Money loss = report.sw_opt - report.sw_reported;
    report.swl_bound_holds = 4 * report.total_envy >= loss;
    report.swl_bound = report.swl_bound_holds ? BoundStatus::Holds : BoundStatus::Fails;
  }
  return report;
}

}  // namespace envyic::metrics
