#include "envyic/position_auction.hpp"

#include <algorithm>
#include <numeric>

#include "envyic/errors.hpp"

namespace envyic::position {

PaymentMatrix::PaymentMatrix(std::size_t n) : n_(n), coeffs_(n * n) {}

PaymentMatrix::PaymentMatrix(const std::vector<std::vector<Money>>& rows) : PaymentMatrix(rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw DimensionError("payment matrix must be square");
    for (std::size_t k = 0; k < n_; ++k) {
      if (rows[i][k] < 0) throw InvalidInstance("payment coefficients must be non-negative");
      at(i, k) = rows[i][k];
    }
  }
}

std::vector<std::vector<Money>> PaymentMatrix::rows() const {
  std::vector<std::vector<Money>> out(n_, std::vector<Money>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) out[i][k] = at(i, k);
  }
  return out;
}

MechanismKind parse_kind(std::string_view tag) {
  if (tag == "vcg") return MechanismKind::vcg();
  if (tag == "gsp") return MechanismKind::gsp();
  if (tag == "gfp") return MechanismKind::gfp();
  throw std::invalid_argument("unknown position mechanism '" + std::string(tag) + "'");
}

std::string_view tag(Rule rule) {
  switch (rule) {
    case Rule::Vcg: return "vcg";
    case Rule::Gsp: return "gsp";
    case Rule::Gfp: return "gfp";
    case Rule::Custom: return "custom";
  }
  return "?";
}

std::vector<std::size_t> rank_order(std::span<const Money> bids) {
  std::vector<std::size_t> order(bids.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return bids[a] > bids[b]; });
  return order;
}

std::vector<Slot> rank_allocate(std::span<const Money> bids, std::size_t num_slots) {
  std::vector<Slot> out(bids.size(), Slot::unassigned());
  auto order = rank_order(bids);
  for (std::size_t r = 0; r < order.size() && r < num_slots; ++r) out[order[r]] = Slot(r);
  return out;
}

PaymentMatrix build_payment_matrix(const MechanismKind& kind, const DiscountCurve& curve, std::size_t n) {
  if (n == 0) throw InvalidInstance("payment matrix needs at least one bidder");
  PaymentMatrix a(n);
  switch (kind.rule) {
    case Rule::Vcg:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = i + 1; k < n; ++k) a.at(i, k) = curve.padded(k - 1) - curve.padded(k);
      }
      break;
    case Rule::Gsp:
      for (std::size_t i = 0; i + 1 < n; ++i) a.at(i, i + 1) = curve.padded(i);
      break;
    case Rule::Gfp:
      for (std::size_t i = 0; i < n; ++i) a.at(i, i) = curve.padded(i);
      break;
    case Rule::Custom:
      if (kind.custom.size() != n) {
        throw DimensionError("custom payment matrix is " + std::to_string(kind.custom.size()) + "x" +
                             std::to_string(kind.custom.size()) + ", expected " + std::to_string(n));
      }
      a = kind.custom;
      break;
  }
  return a;
}

Outcome run_regular(std::span<const Money> bids, const DiscountCurve& curve, const MechanismKind& kind) {
  const std::size_t n = bids.size();
  const auto a = build_payment_matrix(kind, curve, n);
  const auto order = rank_order(bids);

  Outcome out;
  out.assignment.assign(n, Slot::unassigned());
  out.payments.assign(n, Money(0));
  for (std::size_t r = 0; r < n && r < curve.size(); ++r) {
    const std::size_t bidder = order[r];
    out.assignment[bidder] = Slot(r);
    Money price = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(r, k) != 0) price += a.at(r, k) * bids[order[k]];
    }
    out.payments[bidder] = price;
  }
  return out;
}

Outcome run_regular(const PositionInstance& instance, const MechanismKind& kind) {
  instance.validate();
  return run_regular(instance.bids, instance.curve, kind);
}

RegularityReport check_regularity_conditions(const MechanismKind& kind, const PositionInstance& instance) {
  instance.validate();
  const std::size_t n = instance.num_bidders();
  const auto a = build_payment_matrix(kind, instance.curve, n);

  RegularityReport report;
  report.zero_prefix_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= i; ++k) {
      if (a.at(i, k) != 0) report.zero_prefix_ok = false;
    }
  }

  const auto outcome = run_regular(instance, kind);
  const auto order = rank_order(instance.bids);
  report.price_gap_ok = true;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    const Money& upper = outcome.payments[order[r]];
    const Money& lower = outcome.payments[order[r + 1]];
    Money gap = (instance.curve.padded(r) - instance.curve.padded(r + 1)) * instance.bids[order[r + 1]];
    if (upper - lower < gap) report.price_gap_ok = false;
  }
  return report;
}

}  // namespace envyic::position
