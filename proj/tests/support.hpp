#pragma once
// Random instance builders and brute-force oracles shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "envyic/assignment.hpp"
#include "envyic/mechanism.hpp"
#include "envyic/types.hpp"

namespace testkit {

using envyic::AdTypesInstance;
using envyic::DiscountCurve;
using envyic::Money;
using envyic::assignment::WeightMatrix;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  /// k * step with k uniform in [lo, hi].
  Money steps(long lo, long hi, const Money& step) {
    return Money(lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1)))) * step;
  }
  bool coin() { return rng_() & 1U; }

 private:
  std::mt19937_64 rng_;
};

/// Non-increasing curve with entries k/20, k in [0, 20]. A strict curve has
/// distinct positive entries.
inline DiscountCurve random_curve(Draw& d, std::size_t m, bool strict = false) {
  std::vector<Money> w;
  while (w.size() < m) {
    Money x = d.steps(strict ? 1 : 0, 20, Money(1, 20));
    if (!strict || std::find(w.begin(), w.end(), x) == w.end()) w.push_back(std::move(x));
  }
  std::sort(w.begin(), w.end(), std::greater<>());
  return DiscountCurve(std::move(w));
}

/// Common-curve instance. With min_gap > 0 the bids are pairwise at least
/// min_gap apart; otherwise bids come from a coarse grid so ties are common.
inline AdTypesInstance random_position(Draw& d, std::size_t n, std::size_t m, const Money& min_gap,
                                        bool strict_curve = false) {
  AdTypesInstance inst;
  const Money q(1, 100);
  inst.quantum = q;
  if (min_gap > 0) {
    Money level = d.steps(1, 200, q);
    for (std::size_t i = 0; i < n; ++i) {
      inst.bids.push_back(level);
      level += min_gap + d.steps(1, 300, q);
    }
    for (std::size_t i = n; i > 1; --i) std::swap(inst.bids[i - 1], inst.bids[d.below(i)]);
  } else {
    for (std::size_t i = 0; i < n; ++i) inst.bids.push_back(d.steps(1, 8, Money(1, 2)));
  }
  inst.values = inst.bids;
  inst.curves.assign(n, random_curve(d, m, strict_curve));
  return inst;
}

/// Ad Types instance with one random curve per bidder (a few shared types).
inline AdTypesInstance random_ad_types(Draw& d, std::size_t n, std::size_t m, const Money& step = Money(1, 4),
                                       long max_steps = 40) {
  AdTypesInstance inst;
  inst.quantum = step;
  const std::size_t types = d.between(1, 3);
  std::vector<DiscountCurve> pool;
  for (std::size_t t = 0; t < types; ++t) pool.push_back(random_curve(d, m));
  for (std::size_t i = 0; i < n; ++i) {
    inst.bids.push_back(d.steps(1, max_steps, step));
    inst.curves.push_back(pool[d.below(types)]);
  }
  inst.values = inst.bids;
  return inst;
}

/// Maximum over all injective assignments of the smaller side.
inline Money brute_force_max(const WeightMatrix& w) {
  const bool flip = w.rows() > w.cols();
  const std::size_t small = flip ? w.cols() : w.rows();
  const std::size_t large = flip ? w.rows() : w.cols();
  if (small == 0) return 0;
  std::vector<std::size_t> perm(large);
  std::iota(perm.begin(), perm.end(), 0);
  Money best;
  bool first = true;
  do {
    Money total = 0;
    for (std::size_t s = 0; s < small; ++s) total += flip ? w.at(perm[s], s) : w.at(s, perm[s]);
    if (first || total > best) best = total;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Minimal clearing prices of a square assignment game. Each bidder keeps its
/// marginal contribution q_i = OPT - OPT(without bidder i), and the slot it
/// holds in an optimal matching is priced at w_{i,slot} - q_i.
inline std::vector<Money> oracle_min_prices(const WeightMatrix& w) {
  const std::size_t n = w.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> best_perm = perm;
  Money opt;
  bool first = true;
  do {
    Money total = 0;
    for (std::size_t i = 0; i < n; ++i) total += w.at(i, perm[i]);
    if (first || total > opt) {
      opt = total;
      best_perm = perm;
    }
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Money> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Money q = opt - brute_force_max(w.minor(i, envyic::assignment::npos));
    p[best_perm[i]] = w.at(i, best_perm[i]) - q;
  }
  return p;
}

/// Best gain over every bid k*q, k = 0..steps, relative to bidding the true
/// value. Bids exactly equal to a rival's are skipped for rank mechanisms,
/// mirroring the metric's definition.
inline Money dense_regret(std::size_t i, const AdTypesInstance& inst, const envyic::Mechanism& mech, long steps) {
  auto own = [&](const Money& bid) {
    const auto out = mech.run(inst.with_bid(i, bid));
    return envyic::utility(inst.values[i], inst.curves[i], out.assignment[i], out.payments[i]);
  };
  const Money base = own(inst.values[i]);
  Money best = 0;
  for (long k = 0; k <= steps; ++k) {
    const Money bid = Money(k) * inst.quantum;
    if (mech.deviation_rule() == envyic::DeviationRule::Rank) {
      bool tie = false;
      for (std::size_t r = 0; r < inst.num_bidders(); ++r) tie = tie || (r != i && inst.bids[r] == bid);
      if (tie) continue;
    }
    const Money gain = own(bid) - base;
    if (gain > best) best = gain;
  }
  return best;
}

}  // namespace testkit
