#include "envyic/assignment.hpp"

#include <algorithm>
#include <deque>
#include <iostream>

#include "envyic/errors.hpp"

namespace envyic::assignment {
namespace {

constexpr std::size_t kSoftSlotCap = 12;

void warn_large(std::size_t n) {
  static bool warned = false;
  if (n > kSoftSlotCap && !warned) {
    warned = true;
    std::cerr << "envyic: perturbing a " << n << "x" << n
              << " instance; denominators grow as 2^(n^2)\n";
  }
}

}  // namespace

WeightMatrix::WeightMatrix(const std::vector<std::vector<Money>>& rows)
    : WeightMatrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) throw DimensionError("ragged weight matrix");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = rows[i][j];
  }
}

WeightMatrix WeightMatrix::minor(std::size_t skip_row, std::size_t skip_col) const {
  WeightMatrix out(rows_ - (skip_row < rows_ ? 1 : 0), cols_ - (skip_col < cols_ ? 1 : 0));
  std::size_t r = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == skip_row) continue;
    std::size_t c = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j == skip_col) continue;
      out.at(r, c++) = at(i, j);
    }
    ++r;
  }
  return out;
}

WeightMatrix weights_of(const AdTypesInstance& instance) {
  instance.validate();
  WeightMatrix w(instance.num_bidders(), instance.num_slots());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    const auto& alpha = instance.curves[i].weights();
    for (std::size_t j = 0; j < w.cols(); ++j) w.at(i, j) = instance.bids[i] * alpha[j];
  }
  return w;
}

AdTypesInstance balance(const AdTypesInstance& instance) {
  instance.validate();
  const std::size_t n = instance.num_bidders();
  const std::size_t m = instance.num_slots();
  if (n == m) return instance;
  AdTypesInstance out = instance;
  for (auto& curve : out.curves) {
    std::vector<Money> w = curve.weights();
    w.resize(n, Money(0));
    curve = DiscountCurve(std::move(w));
  }
  return out;
}

Perturbation perturb(const WeightMatrix& weights) {
  if (!weights.square()) throw DimensionError("perturbation needs a square weight matrix");
  const std::size_t n = weights.rows();
  warn_large(n);

  Perturbation out;
  out.grid = rational_gcd(weights.values());

  std::vector<Money> sorted(weights.values().begin(), weights.values().end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.delta = 1;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    Money gap = sorted[k] - sorted[k - 1];
    if (k == 1 || gap < out.delta) out.delta = gap;
  }

  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, n * n + 3);
  out.epsilon = out.grid / Money(scale);

  out.weights = weights;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = (n - 1 - j) * n + (n - 1 - i) + 1;
      mpz_class bump;
      mpz_ui_pow_ui(bump.get_mpz_t(), 2, k);
      out.weights.at(i, j) += out.epsilon * Money(bump);
    }
  }
  return out;
}

std::vector<std::size_t> max_weight_matching(const WeightMatrix& weights) {
  const std::size_t n = weights.rows();
  const std::size_t m = weights.cols();
  if (n > m) throw DimensionError("matching needs at least as many columns as rows");
  if (n == 0) return {};

  // Shortest augmenting paths on cost = -w with potentials u (rows), v (cols).
  // Index 0 is a virtual column; rows and columns are 1-based here.
  std::vector<Money> u(n + 1, Money(0)), v(m + 1, Money(0)), minv(m + 1);
  std::vector<std::size_t> owner(m + 1, 0), way(m + 1, 0);
  std::vector<bool> used(m + 1), has_min(m + 1);
  Money cur, delta;

  for (std::size_t row = 1; row <= n; ++row) {
    owner[0] = row;
    std::size_t j0 = 0;
    std::fill(used.begin(), used.end(), false);
    std::fill(has_min.begin(), has_min.end(), false);
    do {
      used[j0] = true;
      const std::size_t i0 = owner[j0];
      std::size_t j1 = 0;
      bool have_delta = false;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        cur = -weights.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (!has_min[j] || cur < minv[j]) {
          minv[j] = cur;
          has_min[j] = true;
          way[j] = j0;
        }
        if (!have_delta || minv[j] < delta) {
          delta = minv[j];
          j1 = j;
          have_delta = true;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= m; ++j) {
    if (owner[j] != 0) row_to_col[owner[j] - 1] = j - 1;
  }
  return row_to_col;
}

Money matching_value(const WeightMatrix& weights, std::span<const std::size_t> row_to_col) {
  Money total = 0;
  for (std::size_t i = 0; i < row_to_col.size(); ++i) total += weights.at(i, row_to_col[i]);
  return total;
}

Money max_matching_value(const WeightMatrix& weights) {
  if (weights.rows() == 0) return 0;
  if (weights.rows() <= weights.cols()) return matching_value(weights, max_weight_matching(weights));
  // Transpose so rows <= cols.
  WeightMatrix t(weights.cols(), weights.rows());
  for (std::size_t i = 0; i < weights.rows(); ++i) {
    for (std::size_t j = 0; j < weights.cols(); ++j) t.at(j, i) = weights.at(i, j);
  }
  return t.rows() == 0 ? Money(0) : matching_value(t, max_weight_matching(t));
}

std::vector<std::size_t> DualCertificate::slot_owner() const {
  std::vector<std::size_t> owner(weights.cols(), npos);
  for (std::size_t i = 0; i < matching.size(); ++i) owner[matching[i]] = i;
  return owner;
}

DualCertificate solve_min_dual_mwpm(const WeightMatrix& weights) {
  if (!weights.square()) throw DimensionError("min-dual MWPM needs a square weight matrix");
  const std::size_t n = weights.rows();

  DualCertificate cert;
  cert.weights = weights;
  cert.matching = max_weight_matching(weights);
  const auto owner = cert.slot_owner();

  // Least prices keeping every bidder on its matched slot:
  //   p_j >= p_k + w_{o,j} - w_{o,k} for o = owner(k), and p_j >= 0.
  // Optimality of the matching rules out positive cycles, so n rounds of
  // relaxation reach the fixed point.
  cert.slot_prices.assign(n, Money(0));
  Money candidate;
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t o = owner[k];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        candidate = cert.slot_prices[k] + weights.at(o, j) - weights.at(o, k);
        if (candidate > cert.slot_prices[j]) {
          cert.slot_prices[j] = candidate;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  cert.bidder_utilities.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    cert.bidder_utilities[i] = weights.at(i, cert.matching[i]) - cert.slot_prices[cert.matching[i]];
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (cert.bidder_utilities[i] + cert.slot_prices[j] == weights.at(i, j)) cert.tight_edges.emplace_back(i, j);
    }
  }
  return cert;
}

std::vector<std::vector<Edge>> tight_edge_sets(const DualCertificate& cert) {
  const std::size_t n = cert.slot_prices.size();
  std::vector<std::vector<Edge>> sets(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const Edge& e : cert.tight_edges) {
      if (e.second >= j && cert.matching[e.first] >= j) sets[j].push_back(e);
    }
  }
  return sets;
}

bool duals_feasible(const DualCertificate& cert) {
  const std::size_t n = cert.matching.size();
  Money primal = 0, dual = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (cert.bidder_utilities[i] < 0 || cert.slot_prices[i] < 0) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (cert.bidder_utilities[i] + cert.slot_prices[j] < cert.weights.at(i, j)) return false;
    }
    const std::size_t j = cert.matching[i];
    if (cert.bidder_utilities[i] + cert.slot_prices[j] != cert.weights.at(i, j)) return false;
    primal += cert.weights.at(i, j);
    dual += cert.bidder_utilities[i] + cert.slot_prices[i];
  }
  return primal == dual;
}

StructureReport verify_structure(const DualCertificate& cert) {
  const std::size_t n = cert.matching.size();
  const auto owner = cert.slot_owner();
  const auto& p = cert.slot_prices;
  const auto& q = cert.bidder_utilities;
  auto tight = [&](std::size_t i, std::size_t j) { return q[i] + p[j] == cert.weights.at(i, j); };

  StructureReport report;

  report.monotone_prices = n == 0 || p.back() == 0;
  for (std::size_t j = 1; j < n; ++j) {
    if (p[j] > p[j - 1]) report.monotone_prices = false;
  }

  report.lowest_tight = true;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t lowest = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (tight(i, j)) {
        lowest = j;
        any = true;
      }
    }
    if (!any || lowest != cert.matching[i]) report.lowest_tight = false;
  }

  // Alternating path: matched edge from the bidder to its slot, then a tight
  // edge to another bidder, then that bidder's matched edge, and so on.
  report.free_path = true;
  for (std::size_t start = 0; start < n && report.free_path; ++start) {
    std::vector<bool> seen_slot(n, false);
    std::deque<std::size_t> frontier{cert.matching[start]};
    seen_slot[cert.matching[start]] = true;
    bool reached = false;
    while (!frontier.empty() && !reached) {
      const std::size_t j = frontier.front();
      frontier.pop_front();
      if (p[j] == 0) {
        reached = true;
        break;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == owner[j] || !tight(i, j)) continue;
        const std::size_t next = cert.matching[i];
        if (!seen_slot[next]) {
          seen_slot[next] = true;
          frontier.push_back(next);
        }
      }
    }
    report.free_path = reached;
  }

  report.clearing = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Money own = cert.weights.at(i, cert.matching[i]) - p[cert.matching[i]];
    for (std::size_t j = 0; j < n; ++j) {
      if (cert.weights.at(i, j) - p[j] > own) report.clearing = false;
    }
  }
  return report;
}

std::vector<Money> round_payments(std::span<const Money> prices, const Money& step) {
  std::vector<Money> out;
  out.reserve(prices.size());
  for (const Money& p : prices) out.push_back(round_to_multiple(p, step));
  return out;
}

Slot PricedMatching::slot_of(std::size_t bidder) const {
  const std::size_t j = certificate.matching.at(bidder);
  return j < num_real_slots ? Slot(j) : Slot::unassigned();
}

std::vector<Money> PricedMatching::rounded_prices() const {
  return round_payments(certificate.slot_prices, perturbation.grid);
}

PricedMatching solve_instance(const AdTypesInstance& instance) {
  const AdTypesInstance balanced = balance(instance);
  PricedMatching out;
  out.num_bidders = instance.num_bidders();
  out.num_real_slots = std::min(instance.num_slots(), instance.num_bidders());
  out.original = weights_of(balanced);
  out.perturbation = perturb(out.original);
  out.certificate = solve_min_dual_mwpm(out.perturbation.weights);
  return out;
}

}  // namespace envyic::assignment
