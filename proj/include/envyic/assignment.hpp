#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "envyic/types.hpp"

namespace envyic::assignment {

/// Dense bidders x slots matrix of edge weights w_{i,j} = b_i * alpha_{i,j}.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  WeightMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), w_(rows * cols) {}
  explicit WeightMatrix(const std::vector<std::vector<Money>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const Money& at(std::size_t i, std::size_t j) const { return w_[i * cols_ + j]; }
  Money& at(std::size_t i, std::size_t j) { return w_[i * cols_ + j]; }
  std::span<const Money> values() const { return w_; }

  /// Copy without row `skip_row` and column `skip_col` (either may be npos).
  WeightMatrix minor(std::size_t skip_row, std::size_t skip_col) const;

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Money> w_;
};

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

using Edge = std::pair<std::size_t, std::size_t>;  // (bidder, slot)

/// Weights from bids and curves.
WeightMatrix weights_of(const AdTypesInstance& instance);

/// Pads with zero-valued slots when n > m, drops the lowest m - n slots when
/// n < m. Square instances come back unchanged.
AdTypesInstance balance(const AdTypesInstance& instance);

struct Perturbation {
  WeightMatrix weights;  // perturbed
  Money delta;           // minimum positive gap between two original weights (1 if none)
  Money grid;            // every original weight is an integer multiple of grid
  Money epsilon;         // grid / 2^(n^2 + 3)
};

/// Adds epsilon * 2^k to the k-th weight (k = 1..n^2). Weights are numbered
/// slot-major from the lowest slot upward and, within a slot, from the last
/// bidder to the first, so rows stay strictly decreasing and ties between
/// bidders favour the lower index for the better slot. Any two distinct edge
/// sets then differ in total weight, so the MWPM is unique.
Perturbation perturb(const WeightMatrix& weights);

/// Row -> column of a maximum weight matching that saturates every row.
/// Requires rows <= cols.
std::vector<std::size_t> max_weight_matching(const WeightMatrix& weights);
Money matching_value(const WeightMatrix& weights, std::span<const std::size_t> row_to_col);
/// Value of max_weight_matching; 0 for an empty matrix.
Money max_matching_value(const WeightMatrix& weights);

struct DualCertificate {
  WeightMatrix weights;
  std::vector<std::size_t> matching;       // bidder -> slot
  std::vector<Money> slot_prices;          // p
  std::vector<Money> bidder_utilities;     // q
  std::vector<Edge> tight_edges;           // q_i + p_j == w_{i,j}

  std::vector<std::size_t> slot_owner() const;  // slot -> bidder
};

/// MWPM with the pointwise-minimal feasible slot prices (p >= 0, q >= 0).
/// Throws DimensionError on a non-square matrix. Pass perturbed weights when
/// the optimum may not be unique.
DualCertificate solve_min_dual_mwpm(const WeightMatrix& weights);

/// E=_j: tight edges (i', j') with j' >= j whose bidder i' is matched at or
/// below slot j. Entry j of the result is E=_j; the sets are nested.
std::vector<std::vector<Edge>> tight_edge_sets(const DualCertificate& cert);

struct StructureReport {
  bool lowest_tight = false;     // matched slot is the lowest-quality tight slot
  bool free_path = false;        // alternating tight path to a zero-price slot
  bool monotone_prices = false;  // p non-increasing and p_last == 0
  bool clearing = false;         // matched slot maximises w_{i,j} - p_j
  bool all() const { return lowest_tight && free_path && monotone_prices && clearing; }
};

StructureReport verify_structure(const DualCertificate& cert);

/// Dual feasibility, complementary slackness and the primal/dual value identity.
bool duals_feasible(const DualCertificate& cert);

/// Each price to the nearest multiple of step (halves round down).
std::vector<Money> round_payments(std::span<const Money> prices, const Money& step);

/// Balanced + perturbed solve of an Ad Types instance, kept together so the
/// pricing rules can read tight edges on the perturbed graph and round back.
struct PricedMatching {
  std::size_t num_bidders = 0;
  std::size_t num_real_slots = 0;  // slots of the original instance kept after balancing
  WeightMatrix original;           // balanced, unperturbed weights
  Perturbation perturbation;
  DualCertificate certificate;     // on perturbed weights

  /// Slot in the original numbering; padding slots map to unassigned.
  Slot slot_of(std::size_t bidder) const;
  /// Minimal prices rounded back to the unperturbed grid.
  std::vector<Money> rounded_prices() const;
};

PricedMatching solve_instance(const AdTypesInstance& instance);

}  // namespace envyic::assignment
