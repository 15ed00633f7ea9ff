#include "envyic/adtypes_pricing.hpp"

#include <algorithm>

namespace envyic::adtypes {

using assignment::Edge;
using assignment::WeightMatrix;

Money threshold_t(std::size_t bidder, std::size_t slot, std::span<const Edge> tight_j, const WeightMatrix& weights) {
  const Money& own = weights.at(bidder, slot);
  Money best = 0;
  for (const Edge& e : tight_j) {
    const Money& w = weights.at(e.first, e.second);
    if (w < own && w > best) best = w;
  }
  return best;
}

ExtendedGspResult extended_gsp_outcome(const AdTypesInstance& instance) {
  const auto solved = assignment::solve_instance(instance);
  const auto& cert = solved.certificate;
  const auto& perturbed = solved.perturbation.weights;
  const Money& grid = solved.perturbation.grid;
  const std::size_t n = cert.matching.size();
  const auto sets = assignment::tight_edge_sets(cert);

  ExtendedGspResult out;
  out.prices.grid.assign(n, std::vector<Money>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Money raw = std::max(cert.slot_prices[j], threshold_t(i, j, sets[j], perturbed));
      out.prices.grid[i][j] = round_to_multiple(raw, grid);
    }
  }

  out.outcome.assignment.assign(n, Slot::unassigned());
  out.outcome.payments.resize(n);
  out.prices.charged.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.prices.charged[i] = out.prices.grid[i][cert.matching[i]];
    out.outcome.assignment[i] = solved.slot_of(i);
    out.outcome.payments[i] = out.outcome.assignment[i].assigned() ? out.prices.charged[i] : Money(0);
  }
  out.certificate = cert;
  return out;
}

Outcome vcg_outcome(const AdTypesInstance& instance) {
  const auto solved = assignment::solve_instance(instance);
  const auto prices = solved.rounded_prices();
  Outcome out;
  const std::size_t n = solved.num_bidders;
  out.assignment.resize(n);
  out.payments.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.assignment[i] = solved.slot_of(i);
    out.payments[i] = out.assignment[i].assigned() ? prices[solved.certificate.matching[i]] : Money(0);
  }
  return out;
}

namespace {

struct GreedyRun {
  std::vector<Slot> assignment;
  std::vector<Money> runner_up;  // per slot
};

GreedyRun run_greedy(const WeightMatrix& w, std::size_t skip = assignment::npos) {
  const std::size_t n = w.rows();
  const std::size_t m = w.cols();
  GreedyRun run;
  run.assignment.assign(n, Slot::unassigned());
  run.runner_up.assign(m, Money(0));
  std::vector<bool> taken(n, false);
  if (skip < n) taken[skip] = true;
  for (std::size_t j = 0; j < m; ++j) {
    std::size_t best = assignment::npos, second = assignment::npos;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      if (best == assignment::npos || w.at(i, j) > w.at(best, j)) {
        second = best;
        best = i;
      } else if (second == assignment::npos || w.at(i, j) > w.at(second, j)) {
        second = i;
      }
    }
    if (best == assignment::npos) break;
    taken[best] = true;
    run.assignment[best] = Slot(j);
    if (second != assignment::npos) run.runner_up[j] = w.at(second, j);
  }
  return run;
}

Money welfare_except(const WeightMatrix& w, const std::vector<Slot>& assignment, std::size_t except) {
  Money total = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i != except && assignment[i].assigned()) total += w.at(i, assignment[i].index());
  }
  return total;
}

}  // namespace

Outcome greedy_outcome(const AdTypesInstance& instance, GreedyRule rule) {
  const WeightMatrix w = assignment::weights_of(instance);
  const std::size_t n = w.rows();
  const GreedyRun run = run_greedy(w);

  Outcome out;
  out.assignment = run.assignment;
  out.payments.assign(n, Money(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!run.assignment[i].assigned()) continue;
    if (rule == GreedyRule::Gsp) {
      out.payments[i] = run.runner_up[run.assignment[i].index()];
    } else {
      const GreedyRun without = run_greedy(w, i);
      out.payments[i] = welfare_except(w, without.assignment, i) - welfare_except(w, run.assignment, i);
    }
  }
  return out;
}

bool check_price_monotonicity(const ExtendedGspPrices& prices) {
  for (const auto& row : prices.grid) {
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j] > row[j - 1]) return false;
    }
  }
  return true;
}

}  // namespace envyic::adtypes
