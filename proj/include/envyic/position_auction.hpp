#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "envyic/types.hpp"

namespace envyic::position {

/// n x n non-negative coefficients a_{i,k}; row i prices the bidder holding
/// rank i against the k-th ranked bid.
class PaymentMatrix {
 public:
  PaymentMatrix() = default;
  explicit PaymentMatrix(std::size_t n);
  /// Throws DimensionError unless rows is square; InvalidInstance on negatives.
  explicit PaymentMatrix(const std::vector<std::vector<Money>>& rows);

  std::size_t size() const { return n_; }
  const Money& at(std::size_t rank, std::size_t k) const { return coeffs_[rank * n_ + k]; }
  Money& at(std::size_t rank, std::size_t k) { return coeffs_[rank * n_ + k]; }

  std::vector<std::vector<Money>> rows() const;

  friend bool operator==(const PaymentMatrix&, const PaymentMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Money> coeffs_;
};

enum class Rule { Vcg, Gsp, Gfp, Custom };

struct MechanismKind {
  Rule rule = Rule::Vcg;
  PaymentMatrix custom;  // only read when rule == Custom

  static MechanismKind vcg() { return {Rule::Vcg, {}}; }
  static MechanismKind gsp() { return {Rule::Gsp, {}}; }
  static MechanismKind gfp() { return {Rule::Gfp, {}}; }
  static MechanismKind with_matrix(PaymentMatrix m) { return {Rule::Custom, std::move(m)}; }
};

/// "vcg" | "gsp" | "gfp"; "custom" needs a matrix and is rejected here.
MechanismKind parse_kind(std::string_view tag);
std::string_view tag(Rule rule);

/// Bidders by non-increasing bid; equal bids keep index order.
std::vector<std::size_t> rank_order(std::span<const Money> bids);

/// bidder -> slot. Ranks at or beyond num_slots are unassigned.
std::vector<Slot> rank_allocate(std::span<const Money> bids, std::size_t num_slots);

/// VCG: a_{i,k} = alpha_{k-1} - alpha_k for k > i. GSP: a_{i,i+1} = alpha_i.
/// GFP: a_{i,i} = alpha_i. The curve is zero-padded beyond its length.
PaymentMatrix build_payment_matrix(const MechanismKind& kind, const DiscountCurve& curve, std::size_t n);

Outcome run_regular(std::span<const Money> bids, const DiscountCurve& curve, const MechanismKind& kind);
Outcome run_regular(const PositionInstance& instance, const MechanismKind& kind);

struct RegularityReport {
  bool zero_prefix_ok = false;  // a_{i,k} = 0 for k <= i
  bool price_gap_ok = false;    // p_i - p_{i+1} >= (alpha_i - alpha_{i+1}) b_{i+1}
};

RegularityReport check_regularity_conditions(const MechanismKind& kind, const PositionInstance& instance);

}  // namespace envyic::position
